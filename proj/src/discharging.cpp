#include "satforge/discharging.hpp"

#include <bit>
#include <sstream>

#include "satforge/errors.hpp"
#include "satforge/paths.hpp"
#include "satforge/saturation.hpp"

namespace satforge {
namespace {

constexpr std::array<std::string_view, kStageCount> kStageNames = {
    "g", "g1", "g2", "g3", "g4", "g5", "f1", "f2", "f3", "f4", "f5", "f6", "f7"};

Vertex single(VertexSet s) { return std::countr_zero(s); }

/// One rule application: reads the previous stage as a snapshot and writes the next.
class Step {
public:
    Step(ChargeLedger& ledger, Stage to)
        : ledger_(ledger),
          to_(static_cast<int>(to)),
          rule_(stage_name(to)),
          prev_(ledger.stages[to_ - 1]),
          next_(prev_) {
        if (ledger.computed != to_) {
            throw std::logic_error("stage " + rule_ + " applied out of order");
        }
    }

    const Charge& prev(Vertex v) const { return prev_[v]; }
    void add(Vertex v, const Charge& delta) { next_[v] += delta; }
    void move(Vertex from, Vertex to, const Charge& amount) {
        next_[from] -= amount;
        next_[to] += amount;
    }
    VertexSet negatives(VertexSet over) const {
        VertexSet out = 0;
        for_each_vertex(over, [&](Vertex v) {
            if (prev_[v] < 0) out |= bit(v);
        });
        return out;
    }
    void flag(Vertex v, std::string message) {
        ledger_.events.push_back({rule_, v, std::move(message), false});
    }

    void finish() {
        Charge net = 0;
        for (Vertex v = 0; v < ledger_.graph.order(); ++v) {
            net += next_[v] - prev_[v];
            if (prev_[v] >= 0 && next_[v] < 0) {
                conflict(v, "sender driven negative: " + to_string(prev_[v]) + " -> " + to_string(next_[v]));
            } else if (prev_[v] < 0 && next_[v] < prev_[v]) {
                conflict(v, "negative vertex lost charge: " + to_string(prev_[v]) + " -> " + to_string(next_[v]));
            }
        }
        ledger_.balances.push_back({rule_, net});
        if (net != 0) conflict(-1, "rule is unbalanced by " + to_string(net));
        ledger_.stages[to_] = std::move(next_);
        ledger_.computed = to_ + 1;
    }

private:
    void conflict(Vertex v, std::string message) {
        ledger_.events.push_back({rule_, v, std::move(message), true});
    }

    ChargeLedger& ledger_;
    int to_;
    std::string rule_;
    const std::vector<Charge>& prev_;
    std::vector<Charge> next_;
};

/// Pays off negative vertices; each one is paid at most once per rule.
class Funding {
public:
    explicit Funding(Step& step) : step_(step) {}
    void fund(Vertex payer, Vertex z) {
        if (contains(funded_, z)) {
            step_.flag(z, "already funded; payment by " + std::to_string(payer) + " skipped");
            return;
        }
        funded_ |= bit(z);
        step_.move(payer, z, -step_.prev(z));
    }

private:
    Step& step_;
    VertexSet funded_ = 0;
};

VertexSet c1_set(const ChargeLedger& L, Vertex u) {
    if (L.level(u) != 5 || L.graph.degree(u) != 3 || L.n(u, 4) != 1 || L.n_in(u, 4, L.minus) != 1) return 0;
    const VertexSet n5 = L.nbrs(u, 5);
    VertexSet out = 0;
    for_each_vertex(n5 & L.one, [&](Vertex w) {
        const VertexSet others = n5 & ~bit(w);
        if (popcount(others) != 1) return;
        const Vertex w2 = single(others);
        if ((L.nbrs(w, 4) & ~L.nbrs(w2, 4)) == 0) out |= bit(w);
    });
    return out;
}

void require(const ChargeLedger& L, Stage s) {
    if (!L.has(s)) throw std::logic_error("ledger stage " + std::string(stage_name(s)) + " is not computed");
}

void rule_g1(ChargeLedger& L) {
    Step st(L, Stage::g1);
    const int n = L.graph.order();
    L.aux.a1.assign(n, 0);
    L.aux.b1.assign(n, 0);
    L.aux.c1.assign(n, 0);
    L.aux.a2.assign(n, 0);
    for_each_vertex(L.outside_v1(), [&](Vertex x) {
        const int i = L.level(x);
        if (contains(L.two, x)) {
            if (i == 2) {
                st.add(x, -frac(L.n_in(x, 2, L.one), 6));
                return;
            }
            VertexSet a1 = 0, b1 = 0;
            for_each_vertex(L.nbrs(x, i - 1) & L.minus, [&](Vertex v) {
                const int k = L.n_in(v, i, L.two);
                if (k >= 2) a1 |= bit(v);
                else if (k == 1) b1 |= bit(v);
            });
            const VertexSet c1 = i == 5 ? c1_set(L, x) : 0;
            if (c1 != 0) st.flag(x, "C1 nonempty: " + format_set(c1));
            L.aux.a1[x] = a1;
            L.aux.b1[x] = b1;
            L.aux.c1[x] = c1;
            st.add(x, -(frac(popcount(a1), 6) + frac(popcount(b1), 3) +
                        frac(L.n_in(x, i, L.one) - popcount(c1), 6)));
        } else if (contains(L.one, x)) {
            if (i == 2) {
                st.add(x, frac(L.n_in(x, 2, L.two), 6));
            } else if (i <= 4) {
                VertexSet a2 = 0;
                for_each_vertex(L.nbrs(x, i - 1) & L.minus, [&](Vertex v) {
                    if (L.n_in(v, i, L.two) == 0) a2 |= bit(v);
                });
                L.aux.a2[x] = a2;
                st.add(x, frac(L.n_in(x, i, L.two), 6) - frac(popcount(a2), 6));
            } else {
                const Vertex u = single(L.nbrs(x, 5));
                if (!contains(c1_set(L, u), x)) st.add(x, frac(L.n_in(x, 5, L.two), 6));
            }
        } else if (contains(L.minus, x) && i <= 4) {
            const int k2 = L.n_in(x, i + 1, L.two);
            if (k2 >= 2) st.add(x, frac(k2, 6));
            else if (k2 == 1) st.add(x, frac(1, 3));
            else if (i <= 3) st.add(x, frac(L.n_in(x, i + 1, L.one), 6));
        }
    });
    st.finish();
}

void rule_pairs_v5(ChargeLedger& L, Stage to) {
    Step st(L, to);
    for_each_vertex(L.level_set(5) & L.one, [&](Vertex w1) {
        for_each_vertex(L.nbrs(w1, 5) & L.one & ~below(w1 + 1), [&](Vertex w2) {
            const Vertex y1 = single(L.nbrs(w1, 4));
            const Vertex y2 = single(L.nbrs(w2, 4));
            if (st.prev(y1) >= 0 && st.prev(y2) < 0) st.move(w1, w2, frac(1, 6));
            else if (st.prev(y2) >= 0 && st.prev(y1) < 0) st.move(w2, w1, frac(1, 6));
        });
    });
    st.finish();
}

void rule_g3(ChargeLedger& L) {
    Step st(L, Stage::g3);
    L.aux.a3.assign(L.graph.order(), 0);
    const VertexSet lower = L.level_set(2) | L.level_set(3) | L.level_set(4);
    for_each_vertex(st.negatives(lower & L.minus), [&](Vertex y) {
        const int i = L.level(y);
        const Charge t = i == 4 ? frac(1, 3) : frac(1, 6);
        VertexSet a3 = 0;
        for_each_vertex(L.nbrs(y, i + 1) & L.one, [&](Vertex z) {
            if (st.prev(z) == t) a3 |= bit(z);
        });
        L.aux.a3[y] = a3;
        for_each_vertex(a3, [&](Vertex z) { st.move(z, y, t); });
    });
    st.finish();
}

void rule_g5(ChargeLedger& L) {
    Step st(L, Stage::g5);
    for_each_vertex(st.negatives(L.level_set(4) & L.minus), [&](Vertex y) {
        for_each_vertex(L.nbrs(y, 5) & L.one, [&](Vertex z) { st.move(z, y, st.prev(z)); });
    });
    st.finish();
}

void rule_f1(ChargeLedger& L) {
    Step st(L, Stage::f1);
    for_each_vertex(L.level_set(5), [&](Vertex w) {
        const Charge c = st.prev(w);
        const VertexSet n4 = L.nbrs(w, 4);
        const int deg = L.graph.degree(w);
        std::vector<std::pair<Vertex, Charge>> shares;
        if (deg == 3 && popcount(n4) == 2 && L.n(w, 5) == 1 && (n4 & ~L.minus) == 0) {
            const Vertex a = single(n4);
            const Vertex b = single(n4 & ~bit(a));
            const Vertex w1 = single(L.nbrs(w, 5));
            auto qualifies = [&](Vertex z1, Vertex z2) {
                const VertexSet common = L.nbrs(w1, 5) & L.nbrs(z2, 5) & L.one & ~bit(w);
                return L.n_in(z1, 5, L.minus) != 0 && common != 0;
            };
            const bool qa = qualifies(a, b);
            const bool qb = qualifies(b, a);
            if (qa && qb) st.flag(w, "two-thirds split qualifies both ways; heavier share to the smaller id");
            if (qa || qb) {
                const Vertex z1 = qa ? a : b;
                shares = {{z1, c * 2 / 3}, {qa ? b : a, c / 3}};
            }
        } else if (deg == 3 && n4 == L.graph.neighbors(w) && (n4 & ~L.minus) == 0) {
            VertexSet heavy = 0;
            for_each_vertex(n4, [&](Vertex z) {
                if (L.n_in(z, 5, L.minus) != 0) heavy |= bit(z);
            });
            if (popcount(heavy) == 1) {
                const VertexSet rest = n4 & ~heavy;
                const Vertex z2 = single(rest);
                const Vertex z3 = single(rest & ~bit(z2));
                if (L.nbrs(z2, 3) == L.nbrs(z3, 3)) shares = {{single(heavy), c / 2}, {z2, c / 4}, {z3, c / 4}};
            }
        }
        if (shares.empty()) {
            const Charge part = c / popcount(n4);
            for_each_vertex(n4, [&](Vertex z) { shares.emplace_back(z, part); });
        }
        for (const auto& [z, amount] : shares) st.move(w, z, amount);
    });
    st.finish();
}

void rule_f2(ChargeLedger& L) {
    Step st(L, Stage::f2);
    const VertexSet v4 = L.level_set(4);
    std::vector<int> received(L.graph.order(), 0);
    for_each_vertex(v4, [&](Vertex z) {
        const VertexSet negs = st.negatives(L.nbrs(z, 4));
        const int k = popcount(negs);
        if (k == 0 || st.prev(z) < frac(k, 6)) return;
        for_each_vertex(negs, [&](Vertex z2) {
            st.move(z, z2, frac(1, 6));
            if (++received[z2] == 2) st.flag(z2, "receives from several V_4 neighbours");
        });
    });
    for_each_vertex(v4 & L.one, [&](Vertex z1) {
        for_each_vertex(L.nbrs(z1, 4) & L.one & ~below(z1 + 1), [&](Vertex z2) {
            const Vertex y1 = single(L.nbrs(z1, 3));
            const Vertex y2 = single(L.nbrs(z2, 3));
            auto fires = [&](Vertex zj, Vertex yj, Vertex zo, Vertex yo) {
                if (st.prev(zj) != 0 || st.prev(yj) >= 0) return false;
                return (st.prev(zo) >= frac(1, 3) && st.prev(yo) < 0) ||
                       (st.prev(zo) >= frac(1, 6) && st.prev(yo) >= 0);
            };
            if (fires(z1, y1, z2, y2)) st.move(z2, z1, frac(1, 6));
            else if (fires(z2, y2, z1, y1)) st.move(z1, z2, frac(1, 6));
        });
    });
    st.finish();
}

void rule_f3(ChargeLedger& L) {
    Step st(L, Stage::f3);
    const auto& leaves = L.aux.leaves;
    for_each_vertex(L.level_set(4), [&](Vertex z) {
        const Charge c = st.prev(z);
        if (c <= 0) return;
        const VertexSet n3 = L.nbrs(z, 3);
        VertexSet with_leaves = 0;
        for_each_vertex(n3, [&](Vertex y) {
            if (leaves[y] != 0) with_leaves |= bit(y);
        });
        if (popcount(n3) == 3 && L.n(z, 4) <= 1 && L.n_in(z, 5, L.minus) == 0 && popcount(with_leaves) == 1) {
            const Vertex y1 = single(with_leaves);
            st.move(z, y1, c / 2);
            for_each_vertex(n3 & ~with_leaves, [&](Vertex y) { st.move(z, y, c / 4); });
            return;
        }
        const Charge part = c / popcount(n3);
        for_each_vertex(n3, [&](Vertex y) { st.move(z, y, part); });
    });
    st.finish();
}

void rule_f4(ChargeLedger& L) {
    Step st(L, Stage::f4);
    const int n = L.graph.order();
    const VertexSet v3 = L.level_set(3);
    L.aux.s.assign(n, Charge(0));
    L.aux.big_a.assign(n, 0);
    for_each_vertex(v3, [&](Vertex y) {
        for_each_vertex(st.negatives(L.nbrs(y, 4)), [&](Vertex z) { L.aux.s[y] -= st.prev(z); });
    });
    for_each_vertex(v3, [&](Vertex y) {
        for_each_vertex(L.nbrs(y, 3), [&](Vertex y1) {
            if (st.prev(y1) - L.aux.s[y1] < 0) L.aux.big_a[y] |= bit(y1);
        });
    });
    Funding funding(st);
    for_each_vertex(v3, [&](Vertex y) {
        const Charge& s = L.aux.s[y];
        const VertexSet a = L.aux.big_a[y];
        const Charge full = s + frac(popcount(a), 6);
        if (st.prev(y) < s || (s == 0 && a == 0)) return;
        for_each_vertex(st.negatives(L.nbrs(y, 4)), [&](Vertex z) { funding.fund(y, z); });
        if (st.prev(y) >= full) for_each_vertex(a, [&](Vertex y1) { st.move(y, y1, frac(1, 6)); });
    });
    st.finish();
}

void rule_f5(ChargeLedger& L) {
    Step st(L, Stage::f5);
    Funding funding(st);
    for_each_vertex(L.level_set(3), [&](Vertex y) {
        const VertexSet negs = st.negatives(L.nbrs(y, 4));
        if (negs == 0) return;
        Charge debt = 0;
        for_each_vertex(negs, [&](Vertex z) { debt -= st.prev(z); });
        if (st.prev(y) < debt) return;
        for_each_vertex(negs, [&](Vertex z) { funding.fund(y, z); });
    });
    st.finish();
}

void rule_f6(ChargeLedger& L) {
    Step st(L, Stage::f6);
    for_each_vertex(L.level_set(3) & L.one, [&](Vertex y1) {
        for_each_vertex(L.nbrs(y1, 3) & L.one & ~below(y1 + 1), [&](Vertex y2) {
            const Vertex x1 = single(L.nbrs(y1, 2));
            const Vertex x2 = single(L.nbrs(y2, 2));
            auto fires = [&](Vertex xa, Vertex xb, Vertex ya, Vertex yb) {
                return st.prev(xa) >= 0 && st.prev(xb) < 0 && st.prev(ya) >= frac(1, 6) && st.prev(yb) == 0;
            };
            if (fires(x1, x2, y1, y2)) st.move(y1, y2, frac(1, 6));
            else if (fires(x2, x1, y2, y1)) st.move(y2, y1, frac(1, 6));
        });
    });
    st.finish();
}

void rule_f7(ChargeLedger& L) {
    Step st(L, Stage::f7);
    L.aux.a4.assign(L.graph.order(), 0);
    Funding funding(st);
    for_each_vertex(L.level_set(2), [&](Vertex x) {
        const VertexSet n3 = L.nbrs(x, 3);
        const VertexSet neg3 = st.negatives(n3);
        const VertexSet pos = n3 & ~neg3;
        VertexSet below4 = 0;
        for_each_vertex(n3, [&](Vertex y) { below4 |= L.nbrs(y, 4); });
        const VertexSet a4 = st.negatives(below4);
        L.aux.a4[x] = a4;
        Charge income = 0, debt = 0;
        for_each_vertex(pos, [&](Vertex y) { income += st.prev(y) / L.n(y, 2); });
        for_each_vertex(a4 | neg3, [&](Vertex y) { debt -= st.prev(y); });
        if (st.prev(x) + income < debt) return;
        for_each_vertex(pos, [&](Vertex y) { st.move(y, x, st.prev(y) / L.n(y, 2)); });
        for_each_vertex(a4 | neg3, [&](Vertex y) { funding.fund(x, y); });
    });
    st.finish();
}

}  // namespace

std::string RootChoice::rationale() const {
    std::ostringstream os;
    os << "alpha=" << alpha << " delta=" << delta;
    if (rule == Rule::min_four_cycles_at_neighbor) {
        os << " (leaf whose neighbour lies on " << four_cycles << " 4-cycles, the minimum)";
    } else {
        os << " (good root in theta class " << theta_index << ", the least available)";
    }
    return os.str();
}

RootChoice choose_root(const Graph& g) {
    const int delta = g.min_degree();
    if (delta == 0) throw RootError(RootError::Kind::delta_zero, "graph has an isolated vertex");
    if (delta >= 3) throw RootError(RootError::Kind::delta_too_large, "minimum degree is at least 3");
    RootChoice rc;
    rc.delta = delta;
    if (delta == 1) {
        rc.rule = RootChoice::Rule::min_four_cycles_at_neighbor;
        int best = -1;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) != 1) continue;
            const int c = four_cycles_through(g, single(g.neighbors(v)));
            if (best < 0 || c < best) {
                best = c;
                rc.alpha = v;
            }
        }
        rc.four_cycles = best;
    } else {
        rc.rule = RootChoice::Rule::good_root_min_theta;
        const VertexSet good = good_roots(g);
        if (good == 0) throw RootError(RootError::Kind::no_good_root, "minimum degree two without a good root");
        const ThetaClassification th = theta_classes(g);
        int best = 0;
        for_each_vertex(good, [&](Vertex v) {
            if (best == 0 || th.cls[v] < best) {
                best = th.cls[v];
                rc.alpha = v;
            }
        });
        rc.theta_index = best;
    }
    rc.closed_nbhd = g.closed_neighbors(rc.alpha);
    return rc;
}

std::string_view stage_name(Stage s) { return kStageNames[static_cast<int>(s)]; }

std::optional<Stage> parse_stage(std::string_view name) {
    for (int i = 0; i < kStageCount; ++i)
        if (kStageNames[i] == name) return static_cast<Stage>(i);
    if (name == "g*") return Stage::g5;
    return std::nullopt;
}

std::string_view class_name(ChargeClass c) {
    switch (c) {
        case ChargeClass::minus_one: return "-1";
        case ChargeClass::minus_two: return "-2";
        case ChargeClass::one: return "1";
        case ChargeClass::two: return "2";
        case ChargeClass::none: break;
    }
    return "-";
}

const std::vector<Charge>& ChargeLedger::at(Stage s) const {
    require(*this, s);
    return stages[static_cast<int>(s)];
}

VertexSet ChargeLedger::negative_at(Stage s) const {
    const auto& values = at(s);
    VertexSet out = 0;
    for_each_vertex(graph.vertices(), [&](Vertex v) {
        if (values[v] < 0) out |= bit(v);
    });
    return out;
}

Charge ChargeLedger::sum(Stage s, VertexSet over) const {
    const auto& values = at(s);
    Charge total = 0;
    for_each_vertex(over, [&](Vertex v) { total += values[v]; });
    return total;
}

std::string ChargeLedger::table(std::span<const Stage> which) const {
    std::ostringstream os;
    os << "stage\tvertex\tlevel\tclass\tvalue\n";
    for (Stage s : which) {
        if (!has(s)) continue;
        for (Vertex v = 0; v < graph.order(); ++v) {
            const ChargeClass c = classified ? classes[v] : ChargeClass::none;
            os << stage_name(s) << '\t' << v << '\t' << level(v) << '\t' << class_name(c) << '\t'
               << to_string(value(s, v)) << '\n';
        }
    }
    return os.str();
}

ChargeLedger initial_charge(const Graph& g, const LevelPartition& levels) {
    if (!levels.is_valid_for(g)) throw PreconditionError("level partition does not match the graph");
    ChargeLedger L;
    L.graph = g;
    L.partition = levels;
    auto& values = L.stages[0];
    values.assign(g.order(), Charge(0));
    for (Vertex x = 0; x < g.order(); ++x) {
        const int i = L.level(x);
        Charge v = frac(L.n(x, i), 2) - frac(4, 3);
        if (i >= 2) v += L.n(x, i - 1);
        values[x] = v;
    }
    L.computed = 1;
    L.aux.leaves.assign(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        for_each_vertex(g.neighbors(v), [&](Vertex u) {
            if (g.degree(u) == 1) L.aux.leaves[v] |= bit(u);
        });
    }
    return L;
}

ChargeLedger initial_charge(const Graph& g, const RootChoice& rc) {
    return initial_charge(g, bfs_levels(g, rc.alpha, 5));
}

ChargeLedger classify(ChargeLedger L) {
    require(L, Stage::g);
    const auto& g0 = L.stages[0];
    L.minus = L.plus = L.one = L.two = L.minus_one = L.minus_two = 0;
    for_each_vertex(L.outside_v1(), [&](Vertex x) {
        const Charge& c = g0[x];
        if (c < 0) {
            L.minus |= bit(x);
            if (c != frac(-1, 3)) L.events.push_back({"g", x, "negative initial charge " + to_string(c), true});
            return;
        }
        L.plus |= bit(x);
        if (c == frac(1, 6)) L.one |= bit(x);
        else if (c >= frac(2, 3)) L.two |= bit(x);
        else L.events.push_back({"g", x, "non-negative charge outside both classes: " + to_string(c), true});
    });
    for_each_vertex(L.minus, [&](Vertex x) {
        if (L.n_in(x, L.level(x) + 1, L.two) >= 2) L.minus_one |= bit(x);
        else L.minus_two |= bit(x);
    });
    L.classes.assign(L.graph.order(), ChargeClass::none);
    for_each_vertex(L.minus_one, [&](Vertex v) { L.classes[v] = ChargeClass::minus_one; });
    for_each_vertex(L.minus_two, [&](Vertex v) { L.classes[v] = ChargeClass::minus_two; });
    for_each_vertex(L.one, [&](Vertex v) { L.classes[v] = ChargeClass::one; });
    for_each_vertex(L.two, [&](Vertex v) { L.classes[v] = ChargeClass::two; });
    L.classified = true;
    return L;
}

ChargeLedger stage_one(ChargeLedger L) {
    if (!L.classified) throw std::logic_error("stage one needs classified vertices");
    if (L.partition.depth() > 5) throw PreconditionError("stage one needs at most five levels");
    rule_g1(L);
    rule_pairs_v5(L, Stage::g2);
    rule_g3(L);
    rule_pairs_v5(L, Stage::g4);
    rule_g5(L);
    const int n = L.graph.order();
    L.aux.t_star.assign(n, Charge(0));
    for_each_vertex(L.level_set(3) | L.level_set(4) | L.level_set(5), [&](Vertex v) {
        L.aux.t_star[v] = L.stages[5][v] / L.n(v, L.level(v) - 1);
    });
    return L;
}

ChargeLedger stage_two(ChargeLedger L) {
    require(L, Stage::g5);
    if (L.computed != static_cast<int>(Stage::f1)) throw std::logic_error("stage two already applied");
    // f_0 is g*: the first stage-two rule reads stage g5 as its snapshot.
    rule_f1(L);
    rule_f2(L);
    const int n = L.graph.order();
    L.aux.t2.assign(n, Charge(0));
    for_each_vertex(L.level_set(4), [&](Vertex v) { L.aux.t2[v] = L.stages[7][v] / L.n(v, 3); });
    rule_f3(L);
    rule_f4(L);
    rule_f5(L);
    rule_f6(L);
    L.aux.t6.assign(n, Charge(0));
    for_each_vertex(L.level_set(3), [&](Vertex v) { L.aux.t6[v] = L.stages[11][v] / L.n(v, 2); });
    rule_f7(L);
    return L;
}

}  // namespace satforge
