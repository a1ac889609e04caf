#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satforge/graph.hpp"

namespace satforge {

struct SearchBudget {
    std::uint64_t max_nodes = 0;  // canonicalized children; 0 = unlimited
    double max_seconds = 0;       // wall clock; 0 = unlimited
};

enum class SearchStatus { complete, budget_exhausted };
std::string to_string(SearchStatus s);

struct SearchResult {
    int n = 0;
    int k = 0;
    SearchStatus status = SearchStatus::complete;
    std::optional<int> sat;         // set when status is complete
    std::vector<Graph> extremal;    // pairwise non-isomorphic, canonical labeling, sorted by graph6
    std::uint64_t explored = 0;     // canonicalized children
    std::vector<std::size_t> level_sizes;  // isomorphism classes per edge count reached
    int cap = 0;                    // edge count of a verified saturated graph bounding the sweep
    int m_low = 0;                  // unconditional lower bound on the answer
};

/// Unconditional lower bound used to skip saturation tests: n - 1 (saturated graphs are
/// connected), and ⌈7n/6⌉ - 2 for k = 6, n >= 9.
int search_lower_bound(int n, int k);

/// Edge count of a greedily grown maximal C_k-free graph; always C_k-saturated.
int greedy_cap(int n, int k);

/// sat(n, C_k) by an ascending sweep over edge counts of isomorphism classes of C_k-free
/// graphs. n <= 12, k >= 3.
SearchResult min_saturated_edges(int n, int k, const SearchBudget& budget = {});

/// All pairwise non-isomorphic C_k-saturated graphs on n vertices with exactly m edges.
/// n <= 10. Status is budget_exhausted when the budget ran out before level m.
SearchResult enumerate_saturated(int n, int k, int m, const SearchBudget& budget = {});

/// Every C_k-saturated graph on n vertices up to isomorphism, any edge count, sorted by
/// edge count and then graph6. n <= 10.
std::vector<Graph> all_saturated(int n, int k, const SearchBudget& budget = {});

/// Every graph on n vertices up to isomorphism, canonical labeling, ordered by edge count
/// and then code. n <= 9.
std::vector<Graph> all_graphs(int n);

}  // namespace satforge
