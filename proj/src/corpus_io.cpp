#include "satforge/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "satforge/graph6.hpp"

namespace satforge {
namespace {

constexpr const char* kHeader = "# n k sat status explored count";

SummaryRow parse_row(const std::string& line) {
    std::istringstream is(line);
    SummaryRow row;
    std::string sat, status;
    if (!(is >> row.n >> row.k >> sat >> status >> row.explored >> row.count)) {
        throw std::runtime_error("malformed summary line: " + line);
    }
    if (sat != "-") row.sat = std::stoi(sat);
    if (status == "complete") row.status = SearchStatus::complete;
    else if (status == "budget-exhausted") row.status = SearchStatus::budget_exhausted;
    else throw std::runtime_error("unknown status in summary line: " + line);
    return row;
}

}  // namespace

std::string format_summary_row(const SummaryRow& row) {
    std::ostringstream os;
    os << row.n << ' ' << row.k << ' ' << (row.sat ? std::to_string(*row.sat) : "-") << ' '
       << to_string(row.status) << ' ' << row.explored << ' ' << row.count;
    return os.str();
}

SummaryRow summary_row(const SearchResult& r) {
    return {r.n, r.k, r.sat, r.status, r.explored, r.extremal.size()};
}

std::filesystem::path write_search_result(const std::filesystem::path& dir, const SearchResult& r) {
    std::filesystem::create_directories(dir);
    const auto g6_path = dir / ("sat_" + std::to_string(r.n) + "_" + std::to_string(r.k) + ".g6");
    {
        std::ofstream out(g6_path);
        if (!out) throw std::runtime_error("cannot write " + g6_path.string());
        for (const Graph& g : r.extremal) out << to_graph6(g) << '\n';
    }
    std::vector<SummaryRow> rows = read_summary(dir);
    std::erase_if(rows, [&](const SummaryRow& row) { return row.n == r.n && row.k == r.k; });
    rows.push_back(summary_row(r));
    std::sort(rows.begin(), rows.end(),
              [](const SummaryRow& a, const SummaryRow& b) { return std::tie(a.n, a.k) < std::tie(b.n, b.k); });
    std::ofstream out(dir / "summary.txt");
    if (!out) throw std::runtime_error("cannot write summary in " + dir.string());
    out << kHeader << '\n';
    for (const auto& row : rows) out << format_summary_row(row) << '\n';
    return g6_path;
}

std::vector<SummaryRow> read_summary(const std::filesystem::path& dir) {
    std::vector<SummaryRow> rows;
    std::ifstream in(dir / "summary.txt");
    if (!in) return rows;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line.front() == '#') continue;
        rows.push_back(parse_row(line));
    }
    return rows;
}

std::optional<SummaryRow> find_row(const std::vector<SummaryRow>& rows, int n, int k) {
    for (const auto& row : rows)
        if (row.n == n && row.k == k) return row;
    return std::nullopt;
}

}  // namespace satforge
