#include "satforge/paths.hpp"

#include <array>
#include <sstream>

namespace satforge {
namespace {

constexpr int kMaxLen = kMaxVertices;

// Depth-first walker over simple paths of fixed length. reach_[r] holds the allowed
// vertices within distance r of the target, which prunes branches that cannot close.
class PathWalker {
public:
    PathWalker(const Graph& g, Vertex from, Vertex to, int len, VertexSet forbidden)
        : g_(g), to_(to), len_(len) {
        allowed_ = g.vertices() & ~forbidden & ~bit(from) & ~bit(to);
        reach_[0] = bit(to);
        for (int r = 1; r < len; ++r) {
            VertexSet grow = reach_[r - 1];
            for_each_vertex(reach_[r - 1], [&](Vertex w) { grow |= g.neighbors(w) & allowed_; });
            reach_[r] = grow;
        }
        seq_[0] = from;
    }

    template <class Visit>
    bool run(Visit&& visit) {
        if (len_ < 1 || len_ >= kMaxLen) return true;
        if (len_ == 1) {
            if (g_.adjacent(seq_[0], to_)) {
                seq_[1] = to_;
                return visit(seq_.data(), 2);
            }
            return true;
        }
        return extend(seq_[0], 1, allowed_, visit);
    }

private:
    template <class Visit>
    bool extend(Vertex cur, int depth, VertexSet free, Visit& visit) {
        const int remaining = len_ - depth + 1;  // edges still to place, counting the one from cur
        if (remaining == 1) {
            if (g_.adjacent(cur, to_)) {
                seq_[depth] = to_;
                return visit(seq_.data(), depth + 1);
            }
            return true;
        }
        VertexSet next = g_.neighbors(cur) & free & reach_[remaining - 1];
        while (next != 0) {
            const Vertex w = std::countr_zero(next);
            next &= next - 1;
            seq_[depth] = w;
            if (!extend(w, depth + 1, free & ~bit(w), visit)) return false;
        }
        return true;
    }

    const Graph& g_;
    Vertex to_;
    int len_;
    VertexSet allowed_ = 0;
    std::array<VertexSet, kMaxLen> reach_{};
    std::array<Vertex, kMaxLen + 1> seq_{};
};

}  // namespace

VertexSet CyclePath::vertex_set() const {
    VertexSet s = 0;
    for (Vertex v : vertices) s |= bit(v);
    return s;
}

bool CyclePath::is_valid_in(const Graph& g) const {
    const int k = static_cast<int>(vertices.size());
    if (k == 0) return false;
    for (Vertex v : vertices)
        if (v < 0 || v >= g.order()) return false;
    if (popcount(vertex_set()) != k) return false;
    for (int i = 0; i + 1 < k; ++i)
        if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
    if (kind == Kind::cycle) return k >= 3 && g.adjacent(vertices.back(), vertices.front());
    return true;
}

std::string CyclePath::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? " " : "") << vertices[i];
    return os.str();
}

bool for_each_path(const Graph& g, Vertex u, Vertex v, int len, VertexSet forbidden, const PathVisitor& visit) {
    if (u == v) return true;
    PathWalker walker(g, u, v, len, forbidden);
    std::vector<Vertex> buffer;
    return walker.run([&](const Vertex* seq, int count) {
        buffer.assign(seq, seq + count);
        return visit(buffer);
    });
}

std::vector<CyclePath> paths_between(const Graph& g, Vertex u, Vertex v, int len) {
    std::vector<CyclePath> out;
    for_each_path(g, u, v, len, 0, [&](const std::vector<Vertex>& seq) {
        out.push_back(CyclePath{seq, CyclePath::Kind::path});
        return true;
    });
    return out;
}

std::optional<CyclePath> first_path(const Graph& g, Vertex u, Vertex v, int len, VertexSet forbidden) {
    if (u == v) return std::nullopt;
    std::optional<CyclePath> found;
    PathWalker walker(g, u, v, len, forbidden);
    walker.run([&](const Vertex* seq, int count) {
        found = CyclePath{std::vector<Vertex>(seq, seq + count), CyclePath::Kind::path};
        return false;
    });
    return found;
}

bool has_path(const Graph& g, Vertex u, Vertex v, int len, VertexSet forbidden) {
    if (u == v) return false;
    PathWalker walker(g, u, v, len, forbidden);
    return !walker.run([](const Vertex*, int) { return false; });
}

std::optional<CyclePath> contains_cycle(const Graph& g, int k) {
    if (k < 3 || k > g.order()) return std::nullopt;
    // Search each cycle from its least vertex u through an edge uv, u < v.
    for (Vertex u = 0; u < g.order(); ++u) {
        VertexSet higher = g.neighbors(u) & ~below(u) & ~bit(u);
        const VertexSet lower_or_u = below(u) | bit(u);
        while (higher != 0) {
            const Vertex v = std::countr_zero(higher);
            higher &= higher - 1;
            if (auto p = first_path(g, u, v, k - 1, lower_or_u)) {
                p->kind = CyclePath::Kind::cycle;
                return p;
            }
        }
    }
    return std::nullopt;
}

bool on_cycle(const Graph& g, Vertex v, int k) {
    if (k < 3) return false;
    bool found = false;
    for_each_vertex(g.neighbors(v), [&](Vertex w) { found = found || has_path(g, v, w, k - 1); });
    return found;
}

int four_cycles_through(const Graph& g, Vertex v) {
    int count = 0;
    const auto nbrs = to_vector(g.neighbors(v));
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            count += popcount(g.neighbors(nbrs[i]) & g.neighbors(nbrs[j]) & ~bit(v));
    return count;
}

}  // namespace satforge
