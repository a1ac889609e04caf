#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satforge/graph.hpp"
#include "satforge/paths.hpp"

namespace satforge {

/// Parameters and vertex names of the extremal graph G_t^ε on n = 3t + ε vertices.
///
/// Vertex ids follow the fixed name order x1 x2 y1 y2 y3 y4 a0 b0 c0, then
/// a_i b_i c_i for i = 1..t-3, then z1 (ε >= 1) and z2 (ε = 2).
struct ConstructionSpec {
    int n = 0;
    int t = 0;
    int epsilon = 0;
    std::map<std::string, Vertex, std::less<>> labels;

    Vertex at(std::string_view name) const;
    /// Name of a vertex id, inverse of `at`.
    std::string name_of(Vertex v) const;
};

/// The 9-vertex, 12-edge base graph. Validated against C_6-saturation on first use;
/// a failed validation throws std::logic_error.
const Graph& build_g0();

/// G_t^ε for n >= 9. Throws std::invalid_argument for n < 9 or n > 64.
std::pair<Graph, ConstructionSpec> build_construction(int n);

/// (4n - ε)/3 + C(ε, 2) with ε = n mod 3; throws for n < 9.
int upper_bound_edges(int n);

/// ⌈4n/3⌉ - 2
int lower_bound_edges(int n);

/// A named witness 6-cycle through a non-edge, written as in the construction proof.
struct ListedWitness {
    std::string label;  // e.g. "C6(a1 c2)"
    Edge non_edge;
    CyclePath cycle;
};

/// Every witness cycle spelled out for G_t^ε: the six a/b/c families for 0 <= i < j <= t-3
/// and the z1 families when ε >= 1.
std::vector<ListedWitness> listed_witnesses(const ConstructionSpec& spec);

struct ConstructionRow {
    int n = 0;
    int epsilon = 0;
    int edges = 0;
    int bound = 0;
    bool saturated = false;
    bool ok() const { return saturated && edges == bound; }
};

struct ConstructionReport {
    std::vector<ConstructionRow> rows;
    std::vector<int> failures() const;
    bool all_ok() const { return failures().empty(); }
    std::string table() const;
};

/// Builds and certifies G_t^ε for every n in [first, last]; rows are ordered by n.
ConstructionReport verify_construction(int first, int last);

}  // namespace satforge
