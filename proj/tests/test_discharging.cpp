#include <doctest.h>

#include <queue>
#include <random>

#include "oracles.hpp"
#include "satforge/audit.hpp"
#include "satforge/construction.hpp"
#include "satforge/discharging.hpp"
#include "satforge/errors.hpp"
#include "satforge/graph6.hpp"
#include "satforge/search.hpp"

using namespace satforge;

namespace {

constexpr std::array kAllStages{Stage::g,  Stage::g1, Stage::g2, Stage::g3, Stage::g4, Stage::g5, Stage::f1,
                                Stage::f2, Stage::f3, Stage::f4, Stage::f5, Stage::f6, Stage::f7};

const std::vector<Graph>& corpus() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        for (int n = 6; n <= 9; ++n)
            for (const Graph& g : all_saturated(n, 6)) out.push_back(g);
        return out;
    }();
    return graphs;
}

// BFS distance + 1 from the closed neighbourhood of root; -1 when unreachable.
std::vector<int> oracle_levels(const Graph& g, Vertex root) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        for (Vertex y = 0; y < g.order(); ++y)
            if (g.adjacent(x, y) && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    for (int& d : dist) d = d <= 0 ? (d < 0 ? -1 : 1) : d;
    return dist;
}

// Initial charge written out from the definition with the oracle levels.
Charge oracle_g(const Graph& g, const std::vector<int>& lvl, Vertex x) {
    int same = 0, below = 0;
    for (Vertex y = 0; y < g.order(); ++y) {
        if (!g.adjacent(x, y)) continue;
        same += lvl[y] == lvl[x];
        below += lvl[y] == lvl[x] - 1;
    }
    Charge c = Charge(same) / 2 - Charge(4) / 3;
    if (lvl[x] >= 2) c += below;
    return c;
}

}  // namespace

TEST_CASE("root choice") {
    const RootChoice star = choose_root(Graph::star(5));
    CHECK(star.alpha == 1);
    CHECK(star.delta == 1);
    CHECK(star.four_cycles == 0);
    CHECK(star.closed_nbhd == (bit(0) | bit(1)));

    auto kind_of = [](const Graph& g) {
        try {
            choose_root(g);
        } catch (const RootError& e) {
            return e.kind();
        }
        FAIL("expected a root error");
        return RootError::Kind::delta_zero;
    };
    CHECK(kind_of(Graph::complete(4)) == RootError::Kind::delta_too_large);
    CHECK(kind_of(Graph(3)) == RootError::Kind::delta_zero);
    CHECK(kind_of(Graph::complete(3)) == RootError::Kind::no_good_root);

    // A leaf whose neighbour lies on fewer 4-cycles wins over a smaller id.
    const Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 5}, {5, 6}});
    const RootChoice rc = choose_root(g);
    CHECK(rc.alpha == 6);
    CHECK(rc.four_cycles == 0);
}

TEST_CASE("root choice on the nine-vertex extremal graph") {
    const auto [g9, spec] = build_construction(9);
    CHECK(to_graph6(g9) == "HtTS?D@");
    const RootChoice rc = choose_root(g9);
    CHECK(rc.alpha == 6);
    CHECK(spec.name_of(rc.alpha) == "a0");
    CHECK(rc.delta == 2);
    CHECK(rc.theta_index == 2);
    CHECK(rc.rule == RootChoice::Rule::good_root_min_theta);
    CHECK(rc.rationale().rfind("alpha=6 delta=2 (good root in theta class 2", 0) == 0);
}

TEST_CASE("initial charges sum to e - 4n/3 on random layered graphs") {
    std::mt19937 rng(41);
    int tested = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 14;
        const Graph g = oracle::random_connected(n, 0.08 + 0.02 * (trial % 6), rng);
        const Vertex root = static_cast<Vertex>(trial % n);
        const auto lvl = oracle_levels(g, root);
        const int depth = *std::max_element(lvl.begin(), lvl.end());
        const ChargeLedger L = initial_charge(g, bfs_levels(g, root, depth));
        for (Vertex x = 0; x < n; ++x) {
            CHECK(L.level(x) == lvl[x]);
            CHECK(L.value(Stage::g, x) == oracle_g(g, lvl, x));
        }
        CHECK(L.sum(Stage::g, g.vertices()) == Charge(g.edge_count()) - Charge(4 * n) / 3);
        ++tested;
    }
    CHECK(tested == 300);
}

TEST_CASE("V_1 charge sums") {
    for (const Graph& g : corpus()) {
        if (g.min_degree() >= 3) continue;
        RootChoice rc;
        try {
            rc = choose_root(g);
        } catch (const RootError&) {
            continue;
        }
        const ChargeLedger L = initial_charge(g, rc);
        CHECK(L.level_set(1) == rc.closed_nbhd);
        CHECK(L.sum(Stage::g, L.level_set(1)) == (rc.delta == 1 ? frac(-5, 3) : Charge(-2)));
    }
    const ChargeLedger k5 = initial_charge(Graph::complete(5), bfs_levels(Graph::complete(5), 0, 5));
    CHECK(k5.sum(Stage::g, all_vertices(5)) == frac(10, 3));
}

TEST_CASE("nine-vertex extremal graph charges") {
    const auto [g9, spec] = build_construction(9);
    const ChargeLedger L = run_discharging(g9, choose_root(g9));
    // Hand-computed from the level partition rooted at a0.
    const std::array<Charge, 9> g{frac(-5, 6), frac(1, 6), frac(1, 6), frac(1, 6), frac(2, 3),
                                  frac(2, 3),  frac(-1, 3), frac(-5, 6), frac(1, 6)};
    const std::array<Charge, 9> f7{frac(-5, 6), frac(5, 6), frac(1, 6), frac(5, 6), Charge(0),
                                   Charge(0),   frac(-1, 3), frac(-5, 6), frac(1, 6)};
    for (Vertex v = 0; v < 9; ++v) {
        CHECK(L.value(Stage::g, v) == g[v]);
        CHECK(L.value(Stage::g5, v) == g[v]);
        CHECK(L.value(Stage::f7, v) == f7[v]);
    }
    CHECK(L.sum(Stage::g, g9.vertices()) == 0);
    CHECK(L.sum(Stage::f7, g9.vertices()) == 0);
    CHECK(L.computed == kStageCount);
    CHECK(L.two == (bit(4) | bit(5)));
    CHECK(L.one == (bit(1) | bit(2) | bit(3) | bit(8)));
}

TEST_CASE("every stage conserves total charge and leaves V_1 alone") {
    for (const Graph& g : corpus()) {
        RootChoice rc;
        try {
            rc = choose_root(g);
        } catch (const RootError&) {
            continue;
        }
        const ChargeLedger L = run_discharging(g, rc);
        const Charge total = L.sum(Stage::g, g.vertices());
        for (Stage s : kAllStages) {
            CHECK(L.sum(s, g.vertices()) == total);
            for_each_vertex(L.level_set(1), [&](Vertex v) { CHECK(L.value(s, v) == L.value(Stage::g, v)); });
        }
        for (const RuleBalance& b : L.balances) CHECK(b.net == 0);
        for (const RuleEvent& e : L.events) CHECK_FALSE(e.conflict);
        // Stage two never pays on V_5.
        for_each_vertex(L.level_set(5), [&](Vertex w) { CHECK(L.value(Stage::f1, w) == 0); });
    }
}

TEST_CASE("classes from the initial charge") {
    for (const Graph& g : corpus()) {
        RootChoice rc;
        try {
            rc = choose_root(g);
        } catch (const RootError&) {
            continue;
        }
        const ChargeLedger L = classify(initial_charge(g, rc));
        CHECK((L.minus | L.plus) == L.outside_v1());
        CHECK((L.minus & L.plus) == 0);
        CHECK((L.minus_one | L.minus_two) == L.minus);
        CHECK((L.one | L.two) == L.plus);
        for_each_vertex(L.minus, [&](Vertex x) { CHECK(L.value(Stage::g, x) == frac(-1, 3)); });
        for_each_vertex(L.minus_one, [&](Vertex x) { CHECK(L.n_in(x, L.level(x) + 1, L.two) >= 2); });
        for_each_vertex(L.one, [&](Vertex x) { CHECK(L.value(Stage::g, x) == frac(1, 6)); });
        for_each_vertex(L.two, [&](Vertex x) { CHECK(L.value(Stage::g, x) >= frac(2, 3)); });
    }
}

TEST_CASE("pipeline preconditions and stage names") {
    const Graph p8 = Graph::path(8);
    const ChargeLedger deep = classify(initial_charge(p8, bfs_levels(p8, 0, 7)));
    CHECK_THROWS_AS(stage_one(deep), PreconditionError);
    CHECK_THROWS_AS(stage_two(deep), std::logic_error);
    CHECK_THROWS_AS(initial_charge(Graph::cycle(5), bfs_levels(Graph::path(5), 0, 5)), PreconditionError);
    CHECK_THROWS_AS(initial_charge(p8, choose_root(p8)), LevelError);

    CHECK(parse_stage("g*") == Stage::g5);
    CHECK(parse_stage("f7") == Stage::f7);
    CHECK_FALSE(parse_stage("f8").has_value());
    CHECK(stage_name(Stage::g3) == "g3");
    CHECK(class_name(ChargeClass::minus_two) == "-2");

    const ChargeLedger c7 = run_discharging(Graph::cycle(7), choose_root(Graph::cycle(7)));
    const std::array<Stage, 1> which{Stage::f7};
    const std::string t = c7.table(which);
    CHECK(t.rfind("stage\tvertex\tlevel\tclass\tvalue\n", 0) == 0);
    CHECK(std::count(t.begin(), t.end(), '\n') == 8);
    CHECK(c7.sum(Stage::f7, all_vertices(7)) == frac(7, 1) - frac(28, 3));
}

TEST_CASE("audit branches") {
    const DischargeAudit k5 = audit(Graph::complete(5));
    CHECK(k5.branch == AuditBranch::min_degree_three);
    CHECK(k5.passed());
    bool found = false;
    for (const AuditCheck& c : k5.checks) found = found || c.evidence.find("10 ≥ 7.5") != std::string::npos;
    CHECK(found);

    CHECK_THROWS_AS(audit(Graph::cycle(7)), PreconditionError);

    const auto [g9, spec] = build_construction(9);
    const DischargeAudit a9 = audit(g9);
    CHECK(a9.branch == AuditBranch::full);
    CHECK(a9.passed(true));
    CHECK(a9.final_bound_ok);
    CHECK(a9.v1_sum == -2);
    CHECK(a9.render().find("verdict: PASS") != std::string::npos);
}

TEST_CASE("audit passes on every small saturated graph") {
    for (const Graph& g : corpus()) {
        const DischargeAudit a = audit(g);
        INFO(to_graph6(g));
        CHECK(a.passed());
        CHECK(a.final_bound_ok);
        CHECK(a.grandchildren_ok);
        CHECK(a.children_ok);
        CHECK(a.final_nonnegative);
        CHECK(a.monotone_ok);
    }
}
