#include "satforge/audit.hpp"

#include <sstream>

#include "satforge/errors.hpp"
#include "satforge/saturation.hpp"

namespace satforge {
namespace {

// 4n/3 - 2
Charge target_bound(int n) { return frac(4 * n, 3) - 2; }

// Renders a multiple of one half as a decimal (15 -> "7.5").
std::string halves(long long twice) {
    std::string out = std::to_string(twice / 2);
    if (twice % 2 != 0) out += ".5";
    return out;
}

std::string vertex_tag(Vertex v) { return "vertex " + std::to_string(v); }

class Checker {
public:
    explicit Checker(DischargeAudit& a) : a_(a) {}
    bool add(std::string name, bool ok, std::string evidence, bool diagnostic = false) {
        a_.checks.push_back({std::move(name), ok, std::move(evidence), diagnostic});
        return ok;
    }

private:
    DischargeAudit& a_;
};

/// First vertex breaking monotone signs over stages [first, last], or -1.
/// Once nonnegative a charge stays nonnegative; a negative charge was never lower before.
Vertex monotone_violation(const ChargeLedger& L, int first, int last, std::string& why) {
    for (Vertex x = 0; x < L.graph.order(); ++x) {
        for (int i = first; i <= last; ++i) {
            const Charge& ci = L.stages[i][x];
            if (ci >= 0) {
                for (int j = i + 1; j <= last; ++j) {
                    if (L.stages[j][x] < 0) {
                        why = std::string(stage_name(Stage(i))) + "=" + to_string(ci) + " but " +
                              std::string(stage_name(Stage(j))) + "=" + to_string(L.stages[j][x]);
                        return x;
                    }
                }
            } else {
                for (int k = first; k < i; ++k) {
                    if (L.stages[k][x] > L.stages[k + 1][x]) {
                        why = "negative at " + std::string(stage_name(Stage(i))) + " but decreased from " +
                              std::string(stage_name(Stage(k))) + " to " + std::string(stage_name(Stage(k + 1)));
                        return x;
                    }
                }
            }
        }
    }
    return -1;
}

struct Counts {
    int lower = 0;       // n_{i-1}
    int lower_plus = 0;  // n_{i-1}^+
    int lower_m1 = 0;    // n_{i-1}^{-1}
    int lower_m2 = 0;    // n_{i-1}^{-2}
    int same = 0;        // n_i
    int same_one = 0;    // n_i^1
    int same_two = 0;    // n_i^2
};

std::string describe(const Counts& c) {
    return "n_{i-1}=" + std::to_string(c.lower) + " n+_{i-1}=" + std::to_string(c.lower_plus) +
           " n-1_{i-1}=" + std::to_string(c.lower_m1) + " n_i=" + std::to_string(c.same) +
           " n2_i=" + std::to_string(c.same_two);
}

Counts counts(const ChargeLedger& L, Vertex x) {
    const int i = L.level(x);
    Counts c;
    c.lower = L.n(x, i - 1);
    c.lower_plus = L.n_in(x, i - 1, L.plus);
    c.lower_m1 = L.n_in(x, i - 1, L.minus_one);
    c.lower_m2 = L.n_in(x, i - 1, L.minus_two);
    c.same = L.n(x, i);
    c.same_one = L.n_in(x, i, L.one);
    c.same_two = L.n_in(x, i, L.two);
    return c;
}

bool strong_class_condition(const Counts& c) {
    const int s = c.lower_plus + c.lower;
    return c.lower_plus >= 2 || (c.lower >= 3 && c.lower + c.same >= 5) || s >= 4 || (s == 3 && c.same_two >= 1) ||
           (s == 3 && c.lower_m1 + c.same >= 2);
}

bool weak_class_condition(const Counts& c) {
    const int s = c.lower_plus + c.lower;
    return c.lower_plus >= 2 || (c.lower >= 2 && c.lower + c.same >= 4) || s >= 3 || (s == 2 && c.same_two >= 1) ||
           (s == 2 && c.lower_m1 + c.same >= 2) || (s == 1 && c.lower_m1 + c.same_two >= 3);
}

void check_ledger(DischargeAudit& a, const ChargeLedger& L) {
    Checker ck(a);
    const Graph& g = L.graph;
    const int n = g.order();
    const VertexSet outer = L.outside_v1();
    const VertexSet all = g.vertices();

    const Charge total_g = L.sum(Stage::g, all);
    const Charge four_thirds_n = frac(4 * n, 3);
    a.edge_identity_ok = ck.add("edge identity", Charge(g.edge_count()) == total_g + four_thirds_n,
                         "e=" + std::to_string(g.edge_count()) + ", sum g=" + to_string(total_g) +
                             ", 4n/3=" + to_string(four_thirds_n));

    a.v1_sum = L.sum(Stage::g, L.level_set(1));
    const Charge expected_v1 = a.root->delta == 1 ? frac(-5, 3) : Charge(-2);
    a.v1_sum_ok = ck.add("V_1 charge sum", a.v1_sum == expected_v1,
                         "sum over V_1=" + to_string(a.v1_sum) + ", expected " + to_string(expected_v1));

    const Charge s_g = L.sum(Stage::g, outer);
    const Charge s_star = L.sum(Stage::g5, outer);
    const Charge s_f7 = L.sum(Stage::f7, outer);
    a.stage1_conserved = ck.add("stage-one conservation", s_g == s_star,
                                "outside V_1: g=" + to_string(s_g) + ", g*=" + to_string(s_star));
    a.stage2_conserved = ck.add("stage-two conservation", s_star == s_f7,
                                "outside V_1: g*=" + to_string(s_star) + ", f7=" + to_string(s_f7));

    {
        int conflicts = 0;
        std::string first;
        for (const auto& e : L.events) {
            if (!e.conflict) continue;
            if (conflicts++ == 0) first = "rule " + e.rule + " at vertex " + std::to_string(e.vertex) + ": " + e.message;
        }
        int unbalanced = 0;
        for (const auto& b : L.balances)
            if (b.net != 0) ++unbalanced;
        a.rules_ok = ck.add("rule balance", conflicts == 0 && unbalanced == 0,
                            conflicts == 0 ? std::to_string(L.balances.size()) + " rules, every one balanced"
                                           : std::to_string(conflicts) + " conflicts; first: " + first);
    }

    {
        std::string why;
        Vertex v = monotone_violation(L, static_cast<int>(Stage::g), static_cast<int>(Stage::g5), why);
        if (v < 0) v = monotone_violation(L, static_cast<int>(Stage::f1), static_cast<int>(Stage::f6), why);
        a.monotone_ok = ck.add("monotone signs", v < 0,
                               v < 0 ? "g..g5 and f1..f6 checked on " + std::to_string(n) + " vertices"
                                     : vertex_tag(v) + ": " + why);
    }

    // Structure of the vertices still negative after stage one.
    {
        Vertex bad = -1;
        std::string why;
        for_each_vertex(L.level_set(2) | L.level_set(3) | L.level_set(4), [&](Vertex x) {
            if (bad >= 0 || L.value(Stage::g5, x) >= 0) return;
            const int i = L.level(x);
            if (L.n_in(x, i + 1, L.two) != 0 || L.n_in(x, i + 1, L.one) > 1) {
                bad = x;
                why = "negative g* with children of class 2 or several of class 1";
                return;
            }
            for_each_vertex(L.nbrs(x, i + 1) & L.one, [&](Vertex y) {
                if (bad < 0 && L.n_in(y, i + 1, L.one) != 1) {
                    bad = x;
                    why = "class-1 child " + std::to_string(y) + " lacks a single class-1 sibling";
                }
            });
        });
        const bool neg_ok = ck.add("negative-vertex structure", bad < 0,
                                   bad < 0 ? "every negative g* vertex of V_2..V_4 checked" : vertex_tag(bad) + ": " + why,
                                   true);
        Vertex bad_cls = -1;
        std::string why_cls;
        for_each_vertex(L.two & (L.level_set(3) | L.level_set(4) | L.level_set(5)), [&](Vertex x) {
            if (bad_cls >= 0) return;
            const Counts c = counts(L, x);
            const Charge& star = L.value(Stage::g5, x);
            if (strong_class_condition(c) && star < frac(c.lower, 3) + frac(c.same, 6)) {
                bad_cls = x;
                why_cls = "g*=" + to_string(star) + " < n_{i-1}/3 + n_i/6 with " + describe(c);
            } else if (weak_class_condition(c) && star < frac(c.lower, 6) + frac(c.same, 6)) {
                bad_cls = x;
                why_cls = "g*=" + to_string(star) + " < n_{i-1}/6 + n_i/6 with " + describe(c);
            }
        });
        const bool cls_ok = ck.add("class-2 lower bounds", bad_cls < 0,
                                   bad_cls < 0 ? "every class-2 vertex of V_3..V_5 checked" : vertex_tag(bad_cls) + ": " + why_cls,
                                   true);
        a.lower_bounds_ok = neg_ok && cls_ok;
    }

    {
        Vertex bad = -1;
        std::string why;
        for_each_vertex(L.two & (L.level_set(3) | L.level_set(4) | L.level_set(5)), [&](Vertex x) {
            if (bad >= 0) return;
            const Counts c = counts(L, x);
            const Charge& star = L.value(Stage::g5, x);
            const Charge first = L.value(Stage::g, x) - frac(c.lower_m2, 3) - frac(c.lower_m1, 6) - frac(c.same_one, 6);
            const Charge second = frac(2 * c.lower, 3) + frac(c.lower_plus, 3) + frac(c.lower_m1, 6) +
                                  frac(c.same, 3) + frac(c.same_two, 6) - frac(4, 3);
            if (star < first || first < second) {
                bad = x;
                why = "g*=" + to_string(star) + ", floor=" + to_string(first) + ", count floor=" + to_string(second);
            }
        });
        a.floor_ok = ck.add("class-2 receiver floor", bad < 0,
                            bad < 0 ? "every class-2 vertex of V_3..V_5 checked" : vertex_tag(bad) + ": " + why, true);
    }

    {
        const VertexSet neg5 = L.negative_at(Stage::f5);
        Vertex bad47 = -1, bad48 = -1;
        std::string why47, why48;
        int worst = 0;
        for_each_vertex(L.level_set(2), [&](Vertex x) {
            int below = 0;
            for_each_vertex(L.nbrs(x, 3), [&](Vertex y) { below += L.n_in(y, 4, neg5); });
            worst = std::max(worst, below);
            if (below > 1 && bad47 < 0) {
                bad47 = x;
                why47 = std::to_string(below) + " negative f5 vertices of V_4 below its V_3 neighbours";
            }
            const VertexSet neg_children = L.nbrs(x, 3) & neg5;
            if (bad48 >= 0) return;
            if (popcount(neg_children) > 1) {
                bad48 = x;
                why48 = std::to_string(popcount(neg_children)) + " negative f5 neighbours in V_3";
            } else if (popcount(neg_children) == 1) {
                for_each_vertex(L.nbrs(x, 3) & ~neg5, [&](Vertex y) {
                    if (bad48 < 0 && L.n_in(y, 4, neg5) != 0) {
                        bad48 = x;
                        why48 = "a negative V_3 child and a negative V_4 vertex below child " + std::to_string(y);
                    }
                });
            }
        });
        a.grandchildren_ok = ck.add("negative f5 grandchildren", bad47 < 0,
                                    bad47 < 0 ? "max over V_2 of the count is " + std::to_string(worst)
                                              : vertex_tag(bad47) + ": " + why47);
        a.children_ok = ck.add("negative f5 children", bad48 < 0,
                               bad48 < 0 ? "every V_2 vertex has at most one, and then none below its siblings"
                                         : vertex_tag(bad48) + ": " + why48);
    }

    {
        const VertexSet neg7 = L.negative_at(Stage::f7) & outer;
        a.final_nonnegative =
            ck.add("final charges nonnegative", neg7 == 0,
                   neg7 == 0 ? "f7 >= 0 on all " + std::to_string(popcount(outer)) + " vertices outside V_1"
                             : vertex_tag(std::countr_zero(neg7)) + ": f7=" +
                                   to_string(L.value(Stage::f7, std::countr_zero(neg7))));
    }

    const Charge bound = target_bound(n);
    const Charge chain = a.v1_sum + s_f7 + four_thirds_n;
    a.final_bound_ok = ck.add("final bound", Charge(g.edge_count()) >= bound,
                              "e=" + std::to_string(g.edge_count()) + " ≥ " + to_string(bound) + " (V_1 sum " +
                                  to_string(a.v1_sum) + " + f7 sum " + to_string(s_f7) + " + 4n/3 = " +
                                  to_string(chain) + ")");
}

DischargeAudit audit_core(const Graph& g) {
    DischargeAudit a;
    Checker ck(a);
    a.n = g.order();
    a.edges = g.edge_count();
    const int n = a.n;
    const int e = a.edges;
    const Charge bound = target_bound(n);

    if (g.min_degree() >= 3) {
        a.branch = AuditBranch::min_degree_three;
        const bool ok = 2 * e >= 3 * n && frac(3 * n, 2) >= bound;
        a.final_bound_ok = ck.add("final bound", ok, "δ≥3 branch: " + std::to_string(e) + " ≥ " + halves(3 * n));
        return a;
    }
    if (n <= 5) {
        a.branch = AuditBranch::complete_small;
        a.final_bound_ok = ck.add("final bound", Charge(e) >= bound,
                                  "complete graph branch: e=" + std::to_string(e) + " ≥ " + to_string(bound));
        return a;
    }
    RootChoice rc;
    try {
        rc = choose_root(g);
    } catch (const RootError& err) {
        if (err.kind() != RootError::Kind::no_good_root) {
            ck.add("root choice", false, err.what());
            return a;
        }
        a.branch = AuditBranch::no_good_root;
        bool degree_ok = false;
        std::string evidence;
        try {
            degree_ok = degree_sum_check(g);
            evidence = degree_ok ? "degree sum over X is at least 3|X|" : "degree sum over X is below 3|X|";
        } catch (const PreconditionError& pe) {
            evidence = pe.what();
        }
        ck.add("degree-sum shortcut", degree_ok, evidence);
        const bool ok = 2 * e >= 3 * n && frac(3 * n, 2) >= bound;
        a.final_bound_ok =
            ck.add("final bound", ok, "no-good-root branch: " + std::to_string(e) + " ≥ " + halves(3 * n));
        return a;
    }
    a.branch = AuditBranch::full;
    a.root = rc;
    if (rc.delta == 2 && rc.theta_index == 5) a.notes.push_back("every good root lies on a C_5^+; root taken from class 5");
    try {
        a.ledger = run_discharging(g, rc);
    } catch (const LevelError& le) {
        ck.add("level partition", false, le.what());
        a.final_bound_ok = ck.add("final bound", Charge(e) >= bound,
                                  "direct count: e=" + std::to_string(e) + " ≥ " + to_string(bound));
        return a;
    }
    for (const auto& ev : a.ledger->events) {
        if (ev.conflict) continue;
        a.notes.push_back("rule " + ev.rule + (ev.vertex >= 0 ? " at vertex " + std::to_string(ev.vertex) : "") +
                          ": " + ev.message);
    }
    check_ledger(a, *a.ledger);
    return a;
}

}  // namespace

std::string to_string(AuditBranch b) {
    switch (b) {
        case AuditBranch::complete_small: return "complete graph on at most five vertices";
        case AuditBranch::min_degree_three: return "minimum degree at least three";
        case AuditBranch::no_good_root: return "minimum degree two without a good root";
        case AuditBranch::full: return "full discharging";
    }
    return "?";
}

bool DischargeAudit::passed(bool strict) const { return failures(strict).empty(); }

std::vector<std::string> DischargeAudit::failures(bool strict) const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.ok && (strict || !c.diagnostic)) out.push_back(c.name + ": " + c.evidence);
    return out;
}

std::string DischargeAudit::render() const {
    std::ostringstream os;
    os << "n=" << n << " e=" << edges << '\n';
    if (reduced) {
        os << "reduced: removed " << reduced_removed << " vertices carrying " << reduced_mass << " edges; audited "
           << "n=" << reduced_order << " e=" << reduced_edges << '\n';
    }
    os << "branch: " << to_string(branch) << '\n';
    if (root) os << "root: " << root->rationale() << '\n';
    for (const auto& c : checks) {
        os << (c.ok ? "[PASS] " : c.diagnostic ? "[WARN] " : "[FAIL] ") << c.name << ": " << c.evidence << '\n';
    }
    for (const auto& note : notes) os << "note: " << note << '\n';
    os << "verdict: " << (passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

ChargeLedger run_discharging(const Graph& g, const RootChoice& rc) {
    return stage_two(stage_one(classify(initial_charge(g, rc))));
}

DischargeAudit audit(const Graph& g) {
    if (!is_saturated(g, 6)) throw PreconditionError("graph is not C_6-saturated");
    if (g.order() <= 5 || g.min_degree() >= 3 || t_sets(g).t2 == 0) return audit_core(g);

    const T2Reduction red = reduce_t2(g);
    DischargeAudit a = audit_core(red.graph);
    a.reduced = true;
    a.reduced_removed = popcount(red.removed);
    a.reduced_mass = red.removed_edge_mass;
    a.reduced_order = red.graph.order();
    a.reduced_edges = red.graph.edge_count();
    a.n = g.order();
    a.edges = g.edge_count();
    a.notes.push_back("removed degree-two triangle vertices " + format_set(red.removed) + " before auditing");

    // The reduced graph's bound plus 3/2 per removed vertex gives the bound for g.
    const bool sat = is_saturated(red.graph, 6);
    const bool clean = t_sets(red.graph).t2 == 0;
    a.checks.push_back({"reduced graph saturated", sat,
                        sat ? "G - T_2 is C_6-saturated" : "G - T_2 is not C_6-saturated", false});
    a.checks.push_back({"reduction terminates", clean,
                        clean ? "G - T_2 has no removable vertices" : "G - T_2 still has removable vertices", false});
    for (auto& c : a.checks) {
        if (c.name == "final bound") c.name = "final bound (reduced graph)";
    }
    const Charge bound = target_bound(a.n);
    a.final_bound_ok = Charge(a.edges) >= bound;
    a.checks.push_back({"final bound", a.final_bound_ok,
                        "e=" + std::to_string(a.edges) + " ≥ " + to_string(bound) + " (e(G - T_2)=" +
                            std::to_string(a.reduced_edges) + " + " + std::to_string(a.reduced_mass) + " removed)",
                        false});
    return a;
}

}  // namespace satforge
