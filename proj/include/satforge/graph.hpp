#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace satforge {

using Vertex = int;
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }

/// Set of vertices 0..n-1.
constexpr VertexSet all_vertices(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Vertices strictly below v.
constexpr VertexSet below(Vertex v) { return bit(v) - 1; }

template <class F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s != 0) {
        const Vertex v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

std::vector<Vertex> to_vector(VertexSet s);
std::string format_set(VertexSet s);

/// Undirected simple graph on vertices 0..n-1 (n <= 64), one adjacency word per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph star(int n);  // center 0

    int order() const { return n_; }
    int edge_count() const { return m_; }
    VertexSet vertices() const { return all_vertices(n_); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    VertexSet closed_neighbors(Vertex v) const { return adj_[v] | bit(v); }
    int degree(Vertex v) const { return popcount(adj_[v]); }
    bool adjacent(Vertex u, Vertex v) const { return contains(adj_[u], v); }
    int min_degree() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    /// Non-adjacent pairs (u, v) with u < v in lexicographic order.
    std::vector<Edge> non_edges() const;

    /// Subgraph induced by `keep`, renumbered in increasing order of old id.
    Graph induced(VertexSet keep) const;
    /// Relabeled copy where old vertex v becomes perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    /// Number of edges with both ends in `s`.
    int edges_within(VertexSet s) const;
    /// Number of edges with one end in `a` and the other in `b` (a, b disjoint).
    int edges_between(VertexSet a, VertexSet b) const;
    bool is_connected() const;

    /// Checks symmetry, irreflexivity and the cached edge count.
    bool is_valid() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

}  // namespace satforge
