#include "satforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "satforge/canonical.hpp"
#include "satforge/construction.hpp"
#include "satforge/graph6.hpp"
#include "satforge/paths.hpp"
#include "satforge/saturation.hpp"

namespace satforge {
namespace {

using Clock = std::chrono::steady_clock;
using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

int components(const Graph& g) {
    VertexSet unseen = g.vertices();
    int count = 0;
    while (unseen != 0) {
        ++count;
        VertexSet frontier = bit(std::countr_zero(unseen));
        VertexSet seen = frontier;
        while (frontier != 0) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
            frontier = next & ~seen;
            seen |= next;
        }
        unseen &= ~seen;
    }
    return count;
}

/// Non-edges whose addition keeps the graph C_k-free (all non-edges when k = 0).
std::vector<Edge> free_additions(const Graph& g, int k) {
    std::vector<Edge> out;
    for (const Edge& e : g.non_edges())
        if (k == 0 || !has_path(g, e.first, e.second, k - 1)) out.push_back(e);
    return out;
}

/// Ascending sweep over edge counts; level m holds the isomorphism classes of C_k-free
/// graphs with m edges that can still reach a connected graph with at most `target` edges.
class Sweep {
public:
    Sweep(int n, int k, int target, const SearchBudget& budget)
        : n_(n), k_(k), target_(target), budget_(budget), start_(Clock::now()) {
        level_.push_back(canonical_form(Graph(n)));
    }

    int edges() const { return m_; }
    const std::vector<CanonicalCode>& level() const { return level_; }
    std::uint64_t explored() const { return explored_.load(); }
    bool exhausted() const { return exhausted_.load(); }

    /// Graphs of the current level with no free addition, i.e. C_k-saturated.
    std::vector<Graph> saturated_here() const {
        std::vector<Graph> out;
        for (const auto& code : level_) {
            Graph g = code.graph();
            if (free_additions(g, k_).empty()) out.push_back(std::move(g));
        }
        return out;
    }

    /// Builds level m + 1; false when the budget ran out (the level is then partial).
    bool advance() {
        const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
        std::vector<CodeSet> found(workers);
        std::atomic<std::size_t> cursor{0};
        auto work = [&](unsigned w) {
            for (std::size_t i; (i = cursor.fetch_add(1)) < level_.size();) {
                if (exhausted_.load()) return;
                expand(level_[i], found[w]);
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        CodeSet merged;
        for (auto& s : found) merged.insert(s.begin(), s.end());
        level_.assign(merged.begin(), merged.end());
        std::sort(level_.begin(), level_.end());
        ++m_;
        return !exhausted_.load();
    }

private:
    void expand(const CanonicalCode& code, CodeSet& out) {
        const Graph g = code.graph();
        for (const Edge& e : free_additions(g, k_)) {
            Graph h = g;
            h.add_edge(e.first, e.second);
            if (target_ >= 0 && h.edge_count() + components(h) - 1 > target_) continue;
            out.insert(canonical_form(h));
            const std::uint64_t done = explored_.fetch_add(1) + 1;
            if (budget_.max_nodes != 0 && done >= budget_.max_nodes) exhausted_ = true;
            if (budget_.max_seconds > 0 && done % 1024 == 0) {
                const std::chrono::duration<double> spent = Clock::now() - start_;
                if (spent.count() > budget_.max_seconds) exhausted_ = true;
            }
            if (exhausted_.load()) return;
        }
    }

    int n_;
    int k_;
    int target_;
    SearchBudget budget_;
    Clock::time_point start_;
    int m_ = 0;
    std::vector<CanonicalCode> level_;
    std::atomic<std::uint64_t> explored_{0};
    std::atomic<bool> exhausted_{false};
};

void validate(int n, int k, int max_n) {
    if (n < 1 || n > max_n) throw std::invalid_argument("search supports 1 <= n <= " + std::to_string(max_n));
    if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
}

void sort_by_graph6(std::vector<Graph>& graphs) {
    std::sort(graphs.begin(), graphs.end(),
              [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
}

}  // namespace

std::string to_string(SearchStatus s) { return s == SearchStatus::complete ? "complete" : "budget-exhausted"; }

int search_lower_bound(int n, int k) {
    int low = std::max(0, n - 1);
    if (k == 6 && n >= 9) low = std::max(low, (7 * n + 5) / 6 - 2);
    return low;
}

int greedy_cap(int n, int k) {
    auto grow = [&](std::vector<Edge> order) {
        Graph g(n);
        for (const Edge& e : order)
            if (!has_path(g, e.first, e.second, k - 1)) g.add_edge(e.first, e.second);
        return g;
    };
    const std::vector<Edge> pairs = Graph(n).non_edges();
    int best = grow(pairs).edge_count();
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 32; ++trial) {
        std::vector<Edge> order = pairs;
        std::shuffle(order.begin(), order.end(), rng);
        best = std::min(best, grow(order).edge_count());
    }
    if (k == 6 && n >= 9) {
        const Graph g = build_construction(n).first;
        if (is_saturated(g, 6)) best = std::min(best, g.edge_count());
    }
    return best;
}

SearchResult min_saturated_edges(int n, int k, const SearchBudget& budget) {
    validate(n, k, 12);
    SearchResult result;
    result.n = n;
    result.k = k;
    result.cap = greedy_cap(n, k);
    result.m_low = search_lower_bound(n, k);
    Sweep sweep(n, k, result.cap, budget);
    while (true) {
        result.level_sizes.push_back(sweep.level().size());
        if (sweep.edges() >= result.m_low) {
            std::vector<Graph> hits = sweep.saturated_here();
            if (!hits.empty()) {
                result.sat = sweep.edges();
                sort_by_graph6(hits);
                result.extremal = std::move(hits);
                break;
            }
        }
        if (sweep.edges() >= result.cap) {
            throw std::logic_error("sweep passed the verified cap without a saturated graph");
        }
        if (!sweep.advance()) {
            result.status = SearchStatus::budget_exhausted;
            break;
        }
    }
    result.explored = sweep.explored();
    return result;
}

SearchResult enumerate_saturated(int n, int k, int m, const SearchBudget& budget) {
    validate(n, k, 10);
    SearchResult result;
    result.n = n;
    result.k = k;
    result.m_low = search_lower_bound(n, k);
    result.cap = m;
    if (m < 0 || m > n * (n - 1) / 2) return result;
    Sweep sweep(n, k, m, budget);
    while (sweep.edges() < m) {
        result.level_sizes.push_back(sweep.level().size());
        if (!sweep.advance()) {
            result.status = SearchStatus::budget_exhausted;
            result.explored = sweep.explored();
            return result;
        }
    }
    result.level_sizes.push_back(sweep.level().size());
    result.extremal = sweep.saturated_here();
    sort_by_graph6(result.extremal);
    result.explored = sweep.explored();
    return result;
}

std::vector<Graph> all_saturated(int n, int k, const SearchBudget& budget) {
    validate(n, k, 10);
    std::vector<Graph> out;
    Sweep sweep(n, k, -1, budget);
    while (!sweep.level().empty()) {
        std::vector<Graph> hits = sweep.saturated_here();
        sort_by_graph6(hits);
        out.insert(out.end(), hits.begin(), hits.end());
        if (!sweep.advance()) throw std::runtime_error("budget exhausted while listing saturated graphs");
    }
    return out;
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 9) throw std::invalid_argument("all_graphs supports n <= 9");
    std::vector<Graph> out;
    if (n == 0) {
        out.emplace_back(0);
        return out;
    }
    Sweep sweep(n, 0, -1, {});
    while (true) {
        for (const auto& code : sweep.level()) out.push_back(code.graph());
        if (sweep.edges() == n * (n - 1) / 2) break;
        sweep.advance();
    }
    return out;
}

}  // namespace satforge
