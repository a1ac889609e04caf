#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "satforge/search.hpp"

namespace satforge {

/// One line of `summary.txt`: `n k sat status explored count`, sat is `-` when unknown.
struct SummaryRow {
    int n = 0;
    int k = 0;
    std::optional<int> sat;
    SearchStatus status = SearchStatus::complete;
    std::uint64_t explored = 0;
    std::size_t count = 0;

    bool operator==(const SummaryRow&) const = default;
};

std::string format_summary_row(const SummaryRow& row);
SummaryRow summary_row(const SearchResult& r);

/// Writes `sat_{n}_{k}.g6` (one graph6 line per extremal graph) and replaces the (n, k)
/// row of `summary.txt`, keeping rows sorted by (n, k). Returns the graph6 path.
std::filesystem::path write_search_result(const std::filesystem::path& dir, const SearchResult& r);

/// Rows of `dir/summary.txt`; empty when the file does not exist. Throws
/// std::runtime_error on a malformed line.
std::vector<SummaryRow> read_summary(const std::filesystem::path& dir);

std::optional<SummaryRow> find_row(const std::vector<SummaryRow>& rows, int n, int k);

}  // namespace satforge
