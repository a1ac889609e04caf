#include "satforge/saturation.hpp"

#include <sstream>

namespace satforge {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::saturated: return "saturated";
        case Verdict::not_free: return "not-free";
        case Verdict::missing_witness: return "missing-witness";
    }
    return "?";
}

std::string SaturationReport::witness_lines() const {
    std::ostringstream os;
    for (const auto& [e, cycle] : witnesses) os << e.first << ' ' << e.second << " : " << cycle.str() << '\n';
    return os.str();
}

SaturationReport check_saturated(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
    SaturationReport report;
    report.k = k;
    report.free_violation = contains_cycle(g, k);
    report.free = !report.free_violation.has_value();
    if (!report.free) {
        report.verdict = Verdict::not_free;
        return report;
    }
    for (const Edge& e : g.non_edges()) {
        if (auto p = first_path(g, e.first, e.second, k - 1)) {
            p->kind = CyclePath::Kind::cycle;
            report.witnesses.emplace(e, std::move(*p));
        } else {
            report.missing.push_back(e);
        }
    }
    report.verdict = report.missing.empty() ? Verdict::saturated : Verdict::missing_witness;
    return report;
}

bool is_cycle_free(const Graph& g, int k) {
    if (k > g.order()) return true;
    for (Vertex u = 0; u < g.order(); ++u) {
        const VertexSet lower_or_u = below(u) | bit(u);
        VertexSet higher = g.neighbors(u) & ~lower_or_u;
        while (higher != 0) {
            const Vertex v = std::countr_zero(higher);
            higher &= higher - 1;
            if (has_path(g, u, v, k - 1, lower_or_u)) return false;
        }
    }
    return true;
}

bool is_saturated(const Graph& g, int k) {
    if (!is_cycle_free(g, k)) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        VertexSet others = g.vertices() & ~g.closed_neighbors(u) & ~below(u);
        while (others != 0) {
            const Vertex v = std::countr_zero(others);
            others &= others - 1;
            if (!has_path(g, u, v, k - 1)) return false;
        }
    }
    return true;
}

TSets t_sets(const Graph& g) {
    VertexSet deg2 = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2) deg2 |= bit(v);
    TSets out;
    for_each_vertex(deg2, [&](Vertex v) {
        const Vertex a = std::countr_zero(g.neighbors(v));
        const Vertex b = 63 - std::countl_zero(g.neighbors(v));
        if (!g.adjacent(a, b)) return;
        out.t |= bit(v);
        if ((g.neighbors(v) & deg2) != 0) out.t2 |= bit(v);
        else out.t1 |= bit(v);
    });
    return out;
}

T2Reduction reduce_t2(const Graph& g) {
    T2Reduction out;
    out.removed = t_sets(g).t2;
    const VertexSet kept = g.vertices() & ~out.removed;
    out.kept = to_vector(kept);
    out.graph = g.induced(kept);
    out.removed_edge_mass = g.edges_within(out.removed) + g.edges_between(out.removed, kept);
    const int t2 = popcount(out.removed);
    if (t2 != 0 && is_saturated(g, 6) && (t2 % 2 != 0 || 2 * out.removed_edge_mass != 3 * t2)) {
        throw BookkeepingError("T_2 bookkeeping violated: removed edge mass " + std::to_string(out.removed_edge_mass) +
                               " != 3*" + std::to_string(t2) + "/2");
    }
    return out;
}

VertexSet good_roots(const Graph& g) {
    VertexSet out = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) continue;
        const Vertex a = std::countr_zero(g.neighbors(v));
        const Vertex b = 63 - std::countl_zero(g.neighbors(v));
        if (!g.adjacent(a, b)) out |= bit(v);
    }
    return out;
}

VertexSet ThetaClassification::members(int i) const {
    VertexSet out = 0;
    for_each_vertex(theta, [&](Vertex v) {
        if (cls[v] == i) out |= bit(v);
    });
    return out;
}

namespace {

// Whether v lies on a 5-cycle whose vertex set spans at least one chord.
bool on_c5_plus(const Graph& g, Vertex v) {
    bool found = false;
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
        if (found) return;
        for_each_path(g, v, w, 4, 0, [&](const std::vector<Vertex>& seq) {
            VertexSet s = 0;
            for (Vertex x : seq) s |= bit(x);
            found = g.edges_within(s) > 5;
            return !found;
        });
    });
    return found;
}

}  // namespace

ThetaClassification theta_classes(const Graph& g) {
    ThetaClassification out;
    out.cls.fill(0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) continue;
        out.theta |= bit(v);
        const bool c4 = on_cycle(g, v, 4);
        const bool c5 = on_cycle(g, v, 5);
        const bool c5p = c5 && on_c5_plus(g, v);
        if (c4) out.in_c4 |= bit(v);
        if (c5) out.in_c5 |= bit(v);
        if (c5p) out.in_c5_plus |= bit(v);
        if (c5p) out.cls[v] = 5;
        else if (c4 && c5) out.cls[v] = 4;
        else if (c4) out.cls[v] = 3;
        else if (c5) out.cls[v] = 2;
        else out.cls[v] = 1;
    }
    return out;
}

bool degree_sum_check(const Graph& g) {
    if (g.min_degree() != 2) throw PreconditionError("degree_sum_check requires minimum degree 2");
    if (!is_saturated(g, 6)) throw PreconditionError("degree_sum_check requires a C_6-saturated graph");
    const TSets t = t_sets(g);
    VertexSet x = g.vertices();
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2 && !contains(t.t1, v)) x &= ~bit(v);
    int degree_sum = 0;
    for_each_vertex(x, [&](Vertex v) { degree_sum += g.degree(v); });
    return degree_sum >= 3 * popcount(x);
}

bool path_replacement_check(const Graph& g, Edge e, int p) {
    if (g.order() > 20) throw std::invalid_argument("path_replacement_check is bounded to n <= 20");
    if (p < 1 || p > 5) throw std::invalid_argument("path length p must be in 1..5");
    const auto [a, b] = e;
    if (a == b || g.adjacent(a, b)) throw std::invalid_argument("path_replacement_check needs a non-edge");

    bool holds = true;
    for_each_path(g, a, b, 5, 0, [&](const std::vector<Vertex>& cycle) {
        // cycle[0] = a ... cycle[5] = b; the non-edge closes index 5 back to index 0.
        for (int j = 1; j <= p && holds; ++j) {
            const int start = 6 - j;
            VertexSet window = 0;
            for (int t = 0; t <= p; ++t) window |= bit(cycle[(start + t) % 6]);
            const Vertex x = cycle[start % 6];
            const Vertex y = cycle[p - j];
            for_each_path(g, x, y, p, window, [&](const std::vector<Vertex>& p2) {
                VertexSet inner = 0;
                for (std::size_t i = 1; i + 1 < p2.size(); ++i) inner |= bit(p2[i]);
                const bool met = !for_each_path(g, x, y, 6 - p, 0, [&](const std::vector<Vertex>& q) {
                    VertexSet s = 0;
                    for (Vertex w : q) s |= bit(w);
                    return (s & inner) == 0;
                });
                holds = met;
                return holds;
            });
        }
        return holds;
    });
    return holds;
}

}  // namespace satforge
