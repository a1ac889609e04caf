#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satforge/charge.hpp"
#include "satforge/discharging.hpp"
#include "satforge/graph.hpp"

namespace satforge {

enum class AuditBranch { complete_small, min_degree_three, no_good_root, full };
std::string to_string(AuditBranch b);

/// One verified claim with its evidence: the evaluated sums, or the first counterexample.
struct AuditCheck {
    std::string name;
    bool ok = true;
    std::string evidence;
    /// Diagnostic checks describe intermediate bounds; they gate only strict mode.
    bool diagnostic = false;
};

struct DischargeAudit {
    int n = 0;
    int edges = 0;
    AuditBranch branch = AuditBranch::full;

    // Removal of degree-two triangle vertices with a degree-two neighbour, when any exist.
    bool reduced = false;
    int reduced_removed = 0;
    int reduced_mass = 0;
    int reduced_order = 0;
    int reduced_edges = 0;

    std::optional<RootChoice> root;
    std::optional<ChargeLedger> ledger;
    Charge v1_sum = 0;

    bool edge_identity_ok = true;
    bool v1_sum_ok = true;
    bool stage1_conserved = true;
    bool stage2_conserved = true;
    bool monotone_ok = true;
    bool lower_bounds_ok = true;  // negative-vertex structure and class lower bounds
    bool floor_ok = true;         // receiver floor for V_i^2
    bool grandchildren_ok = true; // at most one negative V_4 vertex below each V_2 vertex
    bool children_ok = true;      // at most one negative V_3 child, exclusive with the above
    bool final_nonnegative = true;
    bool final_bound_ok = false;
    bool rules_ok = true;         // no rule conflicts and every rule balanced

    std::vector<AuditCheck> checks;
    std::vector<std::string> notes;

    /// Every non-diagnostic check passed (and, under `strict`, every diagnostic one too).
    bool passed(bool strict = false) const;
    std::vector<std::string> failures(bool strict = false) const;
    /// Human-readable report; the ledger table is not included.
    std::string render() const;
};

/// Verifies e(G) >= 4n/3 - 2 along the proof route for a C_6-saturated graph.
/// Throws PreconditionError when g is not C_6-saturated.
DischargeAudit audit(const Graph& g);

/// The full charge pipeline for one graph and root (no branch shortcuts).
ChargeLedger run_discharging(const Graph& g, const RootChoice& rc);

}  // namespace satforge
