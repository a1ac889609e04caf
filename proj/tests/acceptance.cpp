// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every tolerance is exact; charges are rationals and counts are integers.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "satforge/audit.hpp"
#include "satforge/canonical.hpp"
#include "satforge/construction.hpp"
#include "satforge/discharging.hpp"
#include "satforge/graph6.hpp"
#include "satforge/saturation.hpp"
#include "satforge/search.hpp"

using namespace satforge;

namespace {

constexpr int kRandomGraphs = 200;
constexpr std::uint32_t kSeed = 20240601;

struct Corpus {
    std::vector<Graph> graphs;
    std::vector<std::string> origin;
};

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Exhaustive C_6-saturated graphs for n = 6..10 (the n = 9 list contains every extremal
// graph found by the search), plus the construction for n = 9..30.
Corpus build_corpus() {
    Corpus c;
    for (int n = 6; n <= 10; ++n) {
        for (const Graph& g : all_saturated(n, 6)) {
            c.graphs.push_back(g);
            c.origin.push_back("exhaustive n=" + std::to_string(n));
        }
    }
    for (int n = 9; n <= 30; ++n) {
        c.graphs.push_back(build_construction(n).first);
        c.origin.push_back("construction n=" + std::to_string(n));
    }
    return c;
}

int eccentricity(const Graph& g, Vertex root) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    int far = 0;
    while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        far = std::max(far, dist[x]);
        for (Vertex y = 0; y < g.order(); ++y)
            if (g.adjacent(x, y) && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return far;
}

std::optional<RootChoice> try_root(const Graph& g) {
    try {
        return choose_root(g);
    } catch (const RootError&) {
        return std::nullopt;
    }
}

// Witness validity from scratch: k distinct vertices, ends are the non-edge, consecutive
// pairs adjacent in G.
bool witness_ok(const Graph& g, const Edge& e, const CyclePath& c, int k) {
    if (static_cast<int>(c.vertices.size()) != k) return false;
    if (c.vertices.front() != e.first || c.vertices.back() != e.second) return false;
    VertexSet seen = 0;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (contains(seen, c.vertices[i])) return false;
        seen |= bit(c.vertices[i]);
        if (i > 0 && !g.adjacent(c.vertices[i - 1], c.vertices[i])) return false;
    }
    return true;
}

Outcome criterion1() {
    for (int n = 9; n <= 60; ++n) {
        const int eps = n % 3;
        const int formula = (4 * n - eps) / 3 + eps * (eps - 1) / 2;
        const int built = build_construction(n).first.edge_count();
        if (built != formula || upper_bound_edges(n) != formula)
            return {false, "n=" + std::to_string(n) + " built " + std::to_string(built) + " formula " +
                               std::to_string(formula)};
    }
    return {true, "edge count equals the formula for n=9..60"};
}

Outcome criterion2() {
    std::size_t witnesses = 0;
    for (int n = 9; n <= 30; ++n) {
        const Graph g = build_construction(n).first;
        const SaturationReport r = check_saturated(g, 6);
        if (!r.saturated()) return {false, "n=" + std::to_string(n) + " verdict " + to_string(r.verdict)};
        if (r.witnesses.size() != g.non_edges().size()) return {false, "n=" + std::to_string(n) + " incomplete"};
        for (const auto& [e, c] : r.witnesses) {
            if (g.adjacent(e.first, e.second) || !witness_ok(g, e, c, 6))
                return {false, "n=" + std::to_string(n) + " bad witness " + c.str()};
        }
        witnesses += r.witnesses.size();
    }
    return {true, "n=9..30 saturated, " + std::to_string(witnesses) + " witnesses re-validated"};
}

Outcome criterion3() {
    std::ostringstream c5;
    for (int n = 3; n <= 9; ++n) {
        const SearchResult r = min_saturated_edges(n, 3);
        bool star = false;
        for (const Graph& g : r.extremal) star = star || canonical_form(g) == canonical_form(Graph::star(n));
        if (r.status != SearchStatus::complete || r.sat != n - 1 || !star)
            return {false, "C3 n=" + std::to_string(n)};
    }
    for (int n = 5; n <= 8; ++n) {
        const SearchResult r = min_saturated_edges(n, 4);
        if (r.status != SearchStatus::complete || r.sat != (3 * n - 5) / 2) return {false, "C4 n=" + std::to_string(n)};
    }
    c5 << "C5 recorded:";
    for (int n = 5; n <= 9; ++n) {
        const SearchResult r = min_saturated_edges(n, 5);
        if (r.status != SearchStatus::complete) return {false, "C5 n=" + std::to_string(n) + " incomplete"};
        c5 << " n=" << n << ":" << *r.sat;
    }
    return {true, "C3 n=3..9 = n-1 with the star, C4 n=5..8 = floor((3n-5)/2); " + c5.str()};
}

Outcome criterion4() {
    const SearchResult r = min_saturated_edges(9, 6);
    if (r.status != SearchStatus::complete || !r.sat) return {false, "search did not complete"};
    const bool in_range = *r.sat >= 10 && *r.sat <= 12;
    std::ostringstream os;
    os << "sat(9,C6)=" << *r.sat << " in [10,12], " << r.extremal.size() << " extremal graphs, explored "
       << r.explored;
    return {in_range, os.str()};
}

Outcome criterion5(const Corpus& corpus) {
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<int> order(4, 24);
    int random_done = 0;
    while (random_done < kRandomGraphs) {
        const int n = order(rng);
        const Graph g = oracle::random_connected(n, 1.5 / n, rng);
        const Vertex root = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (eccentricity(g, root) > 5) continue;  // level of x is max(1, dist(alpha, x))
        const ChargeLedger L = initial_charge(g, bfs_levels(g, root, 5));
        if (L.sum(Stage::g, g.vertices()) + Charge(4 * n) / 3 != g.edge_count())
            return {false, "random graph " + to_graph6(g) + " root " + std::to_string(root)};
        ++random_done;
    }
    for (const Graph& g : corpus.graphs) {
        const auto rc = try_root(g);
        const ChargeLedger L = rc ? initial_charge(g, *rc) : initial_charge(g, bfs_levels(g, 0, g.order()));
        if (L.sum(Stage::g, g.vertices()) + Charge(4 * g.order()) / 3 != g.edge_count())
            return {false, "corpus graph " + to_graph6(g)};
    }
    return {true, std::to_string(random_done) + " random graphs and " + std::to_string(corpus.graphs.size()) +
                      " corpus graphs satisfy e = sum g + 4n/3"};
}

Outcome criterion6(const std::vector<DischargeAudit>& audits) {
    int ledgers = 0;
    for (const DischargeAudit& a : audits) {
        if (!a.ledger) continue;
        const ChargeLedger& L = *a.ledger;
        const VertexSet outside = L.outside_v1();
        const Charge g = L.sum(Stage::g, outside);
        if (L.sum(Stage::g5, outside) != g || L.sum(Stage::f7, outside) != g)
            return {false, "ledger of a graph with n=" + std::to_string(a.n)};
        ++ledgers;
    }
    return {ledgers > 0, std::to_string(ledgers) + " ledgers conserve the V\\V_1 total at g, g*, f7"};
}

Outcome criterion7(const Corpus& corpus) {
    int d1 = 0, d2 = 0;
    for (const Graph& g : corpus.graphs) {
        const auto rc = try_root(g);
        if (!rc) continue;
        const ChargeLedger L = initial_charge(g, *rc);
        const Charge s = L.sum(Stage::g, L.level_set(1));
        const Charge expected = rc->delta == 1 ? frac(-5, 3) : Charge(-2);
        if (s != expected) return {false, to_graph6(g) + " V_1 sum " + to_string(s)};
        (rc->delta == 1 ? d1 : d2) += 1;
    }
    return {true, std::to_string(d1) + " graphs at -5/3 (min degree 1), " + std::to_string(d2) +
                      " at -2 (min degree 2)"};
}

Outcome criterion8(const Corpus& corpus, const std::vector<DischargeAudit>& audits) {
    int checked = 0, full = 0;
    for (std::size_t i = 0; i < audits.size(); ++i) {
        if (t_sets(corpus.graphs[i]).t2 != 0) continue;
        const DischargeAudit& a = audits[i];
        ++checked;
        full += a.branch == AuditBranch::full;
        if (!a.grandchildren_ok || !a.children_ok || !a.final_nonnegative || !a.monotone_ok)
            return {false, to_graph6(corpus.graphs[i]) + " (" + corpus.origin[i] + ")"};
    }
    return {checked > 0, std::to_string(checked) + " graphs without T_2 (" + std::to_string(full) +
                             " through the full pipeline): grandchildren, children, f7 >= 0, monotone signs"};
}

Outcome criterion9(const Corpus& corpus, const std::vector<DischargeAudit>& audits) {
    for (std::size_t i = 0; i < audits.size(); ++i) {
        const Graph& g = corpus.graphs[i];
        const bool direct = 3 * (g.edge_count() + 2) >= 4 * g.order();
        if (!audits[i].final_bound_ok || !audits[i].passed() || !direct)
            return {false, to_graph6(g) + " (" + corpus.origin[i] + ")"};
    }
    return {true, std::to_string(audits.size()) + " audits conclude e >= 4n/3 - 2"};
}

Outcome criterion10() {
    std::size_t graphs = 0, saturated = 0;
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : all_graphs(n)) {
            ++graphs;
            for (int k = 3; k <= 6; ++k) {
                const bool expected = oracle::naive_saturated(g, k);
                if (check_saturated(g, k).saturated() != expected || is_saturated(g, k) != expected)
                    return {false, to_graph6(g) + " k=" + std::to_string(k)};
                saturated += expected;
            }
        }
    }
    return {graphs == 13598, std::to_string(graphs) + " graphs on n<=8 (k=3..6), " + std::to_string(saturated) +
                                 " saturated pairs agree with the oracle"};
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    int failures = 0;
    auto report = [&](int id, const std::function<Outcome()>& fn) {
        const auto start = clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        std::printf("%s criterion %d: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", id, o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.ok;
    };

    report(1, criterion1);
    report(2, criterion2);
    report(3, criterion3);
    report(4, criterion4);

    const auto start = clock::now();
    const Corpus corpus = build_corpus();
    std::vector<DischargeAudit> audits;
    audits.reserve(corpus.graphs.size());
    int diagnostic_warnings = 0;
    for (const Graph& g : corpus.graphs) {
        audits.push_back(audit(g));
        diagnostic_warnings += !audits.back().passed(true);
    }
    std::printf("corpus: %zu graphs audited in %.2fs, %d with diagnostic warnings\n", corpus.graphs.size(),
                std::chrono::duration<double>(clock::now() - start).count(), diagnostic_warnings);

    report(5, [&] { return criterion5(corpus); });
    report(6, [&] { return criterion6(audits); });
    report(7, [&] { return criterion7(corpus); });
    report(8, [&] { return criterion8(corpus, audits); });
    report(9, [&] { return criterion9(corpus, audits); });
    report(10, criterion10);

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
