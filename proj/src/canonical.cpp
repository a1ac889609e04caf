#include "satforge/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace satforge {
namespace {

using Cells = std::vector<VertexSet>;  // ordered partition

/// Splits cells until every cell is equitable with respect to every other cell.
/// Subcells are ordered by neighbour count, so the result commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            const VertexSet splitter = cells[w];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (popcount(cells[c]) == 1) continue;
                std::array<VertexSet, kMaxCanonicalVertices + 1> by_count{};
                int distinct = 0;
                for_each_vertex(cells[c], [&](Vertex v) {
                    VertexSet& slot = by_count[popcount(g.neighbors(v) & splitter)];
                    if (slot == 0) ++distinct;
                    slot |= bit(v);
                });
                if (distinct == 1) continue;
                Cells pieces;
                for (VertexSet s : by_count)
                    if (s != 0) pieces.push_back(s);
                cells.erase(cells.begin() + static_cast<long>(c));
                cells.insert(cells.begin() + static_cast<long>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

CanonicalCode code_of(const Graph& g, const std::vector<Vertex>& lab) {
    CanonicalCode code;
    code.n = g.order();
    int p = 0;
    for (int i = 0; i < code.n; ++i) {
        for (int j = i + 1; j < code.n; ++j, ++p) {
            if (g.adjacent(lab[i], lab[j])) code.bits[p / 64] |= std::uint64_t{1} << (63 - p % 64);
        }
    }
    return code;
}

class Searcher {
public:
    explicit Searcher(const Graph& g) : g_(g) {}

    std::vector<Vertex> run() {
        Cells cells;
        if (g_.order() > 0) cells.push_back(g_.vertices());
        refine(g_, cells);
        std::vector<Vertex> prefix;
        search(cells, prefix);
        return best_lab_;
    }
    const CanonicalCode& best() const { return best_; }

private:
    void search(const Cells& cells, std::vector<Vertex>& prefix) {
        int target = -1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const int size = popcount(cells[i]);
            if (size > 1 && (target < 0 || size < popcount(cells[target]))) target = static_cast<int>(i);
        }
        if (target < 0) {
            leaf(cells);
            return;
        }
        std::vector<Vertex> explored;
        for_each_vertex(cells[target], [&](Vertex v) {
            if (!explored.empty() && equivalent(v, explored, prefix)) return;
            explored.push_back(v);
            Cells child = cells;
            child[target] = bit(v);
            child.insert(child.begin() + target + 1, cells[target] & ~bit(v));
            refine(g_, child);
            prefix.push_back(v);
            search(child, prefix);
            prefix.pop_back();
        });
    }

    void leaf(const Cells& cells) {
        std::vector<Vertex> lab;
        lab.reserve(cells.size());
        for (VertexSet c : cells) lab.push_back(std::countr_zero(c));
        const CanonicalCode code = code_of(g_, lab);
        if (first_lab_.empty() && g_.order() > 0) {
            first_lab_ = lab;
            first_ = code;
            best_lab_ = lab;
            best_ = code;
            return;
        }
        if (code == first_) {
            add_automorphism(first_lab_, lab);
        } else if (code == best_) {
            add_automorphism(best_lab_, lab);
        } else if (code > best_) {
            best_ = code;
            best_lab_ = lab;
        }
    }

    void add_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> gamma(g_.order());
        for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
        generators_.push_back(std::move(gamma));
    }

    /// True when v shares an orbit with an explored vertex under the automorphisms found
    /// so far that fix the prefix pointwise.
    bool equivalent(Vertex v, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) const {
        std::array<Vertex, kMaxCanonicalVertices> parent{};
        std::iota(parent.begin(), parent.begin() + g_.order(), 0);
        auto find = [&](Vertex x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : generators_) {
            if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; })) continue;
            for (Vertex x = 0; x < g_.order(); ++x) parent[find(x)] = find(gamma[x]);
        }
        const Vertex root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex w) { return find(w) == root; });
    }

    const Graph& g_;
    std::vector<Vertex> first_lab_, best_lab_;
    CanonicalCode first_, best_;
    std::vector<std::vector<Vertex>> generators_;
};

void require_small(const Graph& g) {
    if (g.order() > kMaxCanonicalVertices) {
        throw std::invalid_argument("canonical form supports at most 16 vertices, got " + std::to_string(g.order()));
    }
}

}  // namespace

std::string CanonicalCode::bytes() const {
    std::string out(1, static_cast<char>(n));
    for (std::uint64_t word : bits)
        for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<char>((word >> shift) & 0xFF));
    return out;
}

Graph CanonicalCode::graph() const {
    Graph g(n);
    int p = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++p) {
            if ((bits[p / 64] >> (63 - p % 64)) & 1U) g.add_edge(i, j);
        }
    }
    return g;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(c.n + 1);
    for (std::uint64_t w : c.bits) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
    require_small(g);
    Searcher s(g);
    const std::vector<Vertex> lab = s.run();
    std::vector<Vertex> perm(g.order());
    for (std::size_t i = 0; i < lab.size(); ++i) perm[lab[i]] = static_cast<Vertex>(i);
    return perm;
}

CanonicalCode canonical_form(const Graph& g) {
    require_small(g);
    if (g.order() == 0) return CanonicalCode{};
    Searcher s(g);
    s.run();
    return s.best();
}

Graph canonical_graph(const Graph& g) {
    const std::vector<Vertex> perm = canonical_labeling(g);
    return g.relabeled(perm);
}

}  // namespace satforge
