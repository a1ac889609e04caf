#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "satforge/charge.hpp"
#include "satforge/graph.hpp"
#include "satforge/levels.hpp"

namespace satforge {

class RootError : public std::runtime_error {
public:
    enum class Kind { delta_too_large, no_good_root, delta_zero };
    RootError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct RootChoice {
    enum class Rule { min_four_cycles_at_neighbor, good_root_min_theta };

    Vertex alpha = 0;
    VertexSet closed_nbhd = 0;
    int delta = 0;
    Rule rule = Rule::min_four_cycles_at_neighbor;
    int four_cycles = 0;  // minimum degree one: 4-cycles through the neighbor of alpha
    int theta_index = 0;  // minimum degree two: class 1..5 of alpha

    std::string rationale() const;
};

/// Picks the root of the level partition.
///   min degree 1: a leaf whose neighbor lies on the fewest 4-cycles;
///   min degree 2: a good root of least theta class.
/// Ties go to the least vertex id. Throws RootError when the minimum degree is 0 or at
/// least 3, or when it is 2 and no good root exists.
RootChoice choose_root(const Graph& g);

enum class Stage : int { g, g1, g2, g3, g4, g5, f1, f2, f3, f4, f5, f6, f7 };
inline constexpr int kStageCount = 13;

std::string_view stage_name(Stage s);
std::optional<Stage> parse_stage(std::string_view name);

/// Class tags of V_2..V_5: V_i^{-1}, V_i^{-2}, V_i^1, V_i^2.
enum class ChargeClass { none, minus_one, minus_two, one, two };
std::string_view class_name(ChargeClass c);

/// A rule application that needs attention: a sender pushed below zero, an unbalanced
/// rule, or a reading choice that fired (flag).
struct RuleEvent {
    std::string rule;
    Vertex vertex = -1;
    std::string message;
    bool conflict = false;
};

/// Net charge created by one rule (sum of all per-vertex changes); zero when balanced.
struct RuleBalance {
    std::string rule;
    Charge net;
};

/// Derived per-vertex quantities recorded while the rules run.
struct LedgerAux {
    std::vector<VertexSet> a1, b1, c1;  // stage one (1.1)
    std::vector<VertexSet> a2;          // stage one (1.2)
    std::vector<VertexSet> a3;          // stage one (3)
    std::vector<Charge> s;              // stage two (4): debt of negative V_4 neighbours
    std::vector<VertexSet> big_a;       // stage two (4): A(y)
    std::vector<VertexSet> a4;          // stage two (7)
    std::vector<VertexSet> leaves;      // L(v)
    std::vector<Charge> t_star;         // g*(v) / n_{i-1}(v)
    std::vector<Charge> t2;             // f_2(v) / n_3(v), v in V_4
    std::vector<Charge> t6;             // f_6(v) / n_2(v), v in V_3
};

struct ChargeLedger {
    Graph graph;
    LevelPartition partition;
    std::array<std::vector<Charge>, kStageCount> stages;
    int computed = 0;  // number of stages filled, in Stage order

    std::vector<ChargeClass> classes;
    bool classified = false;
    // Class sets over V_2..V_5 (computed from the initial charge g).
    VertexSet minus = 0, plus = 0, one = 0, two = 0, minus_one = 0, minus_two = 0;

    LedgerAux aux;
    std::vector<RuleEvent> events;
    std::vector<RuleBalance> balances;

    bool has(Stage s) const { return static_cast<int>(s) < computed; }
    const std::vector<Charge>& at(Stage s) const;
    const Charge& value(Stage s, Vertex v) const { return at(s)[v]; }

    int level(Vertex v) const { return partition.level(v); }
    VertexSet level_set(int i) const { return partition.level_set(i); }
    /// N_i(x)
    VertexSet nbrs(Vertex x, int i) const { return graph.neighbors(x) & level_set(i); }
    /// n_i(x)
    int n(Vertex x, int i) const { return popcount(nbrs(x, i)); }
    /// |N_i(x) ∩ cls|
    int n_in(Vertex x, int i, VertexSet cls) const { return popcount(nbrs(x, i) & cls); }

    VertexSet outside_v1() const { return graph.vertices() & ~level_set(1); }
    VertexSet negative_at(Stage s) const;
    Charge sum(Stage s, VertexSet over) const;

    /// One row per vertex per requested stage: `stage vertex level class value`.
    std::string table(std::span<const Stage> which) const;
};

/// Initial charge g from a root choice (levels computed with max level 5).
ChargeLedger initial_charge(const Graph& g, const RootChoice& rc);
/// Initial charge g for an explicit layering (any depth).
ChargeLedger initial_charge(const Graph& g, const LevelPartition& levels);

ChargeLedger classify(ChargeLedger ledger);
/// Stage one: g -> g1 .. g5 (= g*). Requires classify() and depth <= 5.
ChargeLedger stage_one(ChargeLedger ledger);
/// Stage two: g* -> f1 .. f7. Requires stage_one().
ChargeLedger stage_two(ChargeLedger ledger);

}  // namespace satforge
