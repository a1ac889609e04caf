#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satforge/errors.hpp"
#include "satforge/graph.hpp"
#include "satforge/paths.hpp"

namespace satforge {

enum class Verdict { saturated, not_free, missing_witness };

std::string to_string(Verdict v);

/// Certificate for C_k-saturation. For each non-edge uv the witness is the
/// lexicographically least k-cycle of G + uv, written u ... v (closing edge v-u).
struct SaturationReport {
    int k = 0;
    bool free = false;
    std::optional<CyclePath> free_violation;
    std::map<Edge, CyclePath> witnesses;
    std::vector<Edge> missing;  // non-edges without a witness, lexicographic
    Verdict verdict = Verdict::not_free;

    bool saturated() const { return verdict == Verdict::saturated; }
    /// One line per non-edge: `u v : c1 c2 ... ck`.
    std::string witness_lines() const;
};

SaturationReport check_saturated(const Graph& g, int k);

/// Fast predicates without certificates.
bool is_cycle_free(const Graph& g, int k);
bool is_saturated(const Graph& g, int k);

struct TSets {
    VertexSet t = 0;   // degree two and on a triangle
    VertexSet t1 = 0;  // ... with no degree-two neighbor
    VertexSet t2 = 0;  // ... with a degree-two neighbor
};

TSets t_sets(const Graph& g);

struct T2Reduction {
    Graph graph;                 // G - T_2(G)
    VertexSet removed = 0;       // T_2(G) in the input numbering
    std::vector<Vertex> kept;    // kept[new id] = old id
    int removed_edge_mass = 0;   // e(G[T_2]) + e(T_2, V \ T_2)
};

/// Deletes T_2 in one step. When g is C_6-saturated the removed edge mass must equal
/// 3|T_2|/2; otherwise a BookkeepingError is thrown.
T2Reduction reduce_t2(const Graph& g);

/// Degree-two vertices whose two neighbors are non-adjacent.
VertexSet good_roots(const Graph& g);

/// Classes 1..5 partition the degree-two vertices:
///   5: on a C_5^+ (a 5-cycle with a chord);
///   4: on a 4-cycle and a 5-cycle but on no C_5^+;
///   3: on a 4-cycle, on no 5-cycle;
///   2: on a 5-cycle, on no 4-cycle, on no C_5^+;
///   1: on neither.
struct ThetaClassification {
    VertexSet theta = 0;
    VertexSet in_c4 = 0;
    VertexSet in_c5 = 0;
    VertexSet in_c5_plus = 0;
    std::array<int, kMaxVertices> cls{};  // 0 outside theta

    VertexSet members(int i) const;
};

ThetaClassification theta_classes(const Graph& g);

/// Sum of degrees over X = V minus {degree-two vertices not in T_1} is at least 3|X|.
/// Requires g C_6-saturated with minimum degree two; throws PreconditionError otherwise.
bool degree_sum_check(const Graph& g);

/// Path-replacement property for a non-edge e = ab and path length p in 1..5: for every
/// 6-cycle C of G + e, every p-subpath P_1 of C through e with ends x, y, and every
/// p-path P_2 of G from x to y meeting P_1 only in {x, y}, some (6-p)-path of G from x
/// to y meets P_2 internally. Vacuously true without such configurations. n <= 20.
bool path_replacement_check(const Graph& g, Edge e, int p);

}  // namespace satforge
