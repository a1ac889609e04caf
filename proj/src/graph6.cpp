#include "satforge/graph6.hpp"

#include <fstream>

namespace satforge {
namespace {

constexpr int kBias = 63;

int decode_char(char c) {
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > 63) {
        throw Graph6Error("graph6: character out of range: code " +
                          std::to_string(static_cast<unsigned char>(c)));
    }
    return value;
}

}  // namespace

Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty record");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = decode_char(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') throw Graph6Error("graph6: n > 258047 is not supported");
        if (text.size() < 4) throw Graph6Error("graph6: truncated 4-byte header");
        n = (decode_char(text[1]) << 12) | (decode_char(text[2]) << 6) | decode_char(text[3]);
        pos = 4;
        if (n < 63) throw Graph6Error("graph6: non-canonical long header for n < 63");
    }
    if (n > kMaxVertices) throw Graph6Error("graph6: n = " + std::to_string(n) + " exceeds 64");

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t char_count = (bit_count + 5) / 6;
    if (text.size() - pos != char_count) {
        throw Graph6Error("graph6: expected " + std::to_string(char_count) + " data characters, got " +
                          std::to_string(text.size() - pos));
    }

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = decode_char(text[pos + k / 6]);
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < char_count * 6; ++k) {
        if ((decode_char(text[pos + k / 6]) >> (5 - k % 6)) & 1) {
            throw Graph6Error("graph6: nonzero padding bits");
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(from_graph6(line));
    }
    return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph6_stream(in);
}

}  // namespace satforge
