#include "satforge/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace satforge {

std::vector<Vertex> to_vector(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](Vertex v) { out.push_back(v); });
    return out;
}

std::string format_set(VertexSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each_vertex(s, [&](Vertex v) {
        if (!first) os << ',';
        os << v;
        first = false;
    });
    os << '}';
    return os.str();
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("graph order must be in 0..64, got " + std::to_string(n));
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::star(int n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : kMaxVertices;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        throw std::invalid_argument("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (adjacent(u, v)) return;
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || !adjacent(u, v)) return;
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    --m_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for_each_vertex(adj_[u] & ~below(u) & ~bit(u), [&](Vertex v) { out.emplace_back(u, v); });
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet keep) const {
    keep &= vertices();
    std::array<Vertex, kMaxVertices> id{};
    int k = 0;
    for_each_vertex(keep, [&](Vertex v) { id[v] = k++; });
    Graph h(k);
    for_each_vertex(keep, [&](Vertex u) {
        for_each_vertex(adj_[u] & keep, [&](Vertex v) {
            if (u < v) h.add_edge(id[u], id[v]);
        });
    });
    return h;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

int Graph::edges_within(VertexSet s) const {
    int twice = 0;
    for_each_vertex(s & vertices(), [&](Vertex v) { twice += popcount(adj_[v] & s); });
    return twice / 2;
}

int Graph::edges_between(VertexSet a, VertexSet b) const {
    int count = 0;
    for_each_vertex(a & vertices(), [&](Vertex v) { count += popcount(adj_[v] & b & ~a); });
    return count;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    VertexSet seen = bit(0);
    VertexSet frontier = bit(0);
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= adj_[v]; });
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == vertices();
}

bool Graph::is_valid() const {
    int twice = 0;
    for (Vertex v = 0; v < n_; ++v) {
        if (contains(adj_[v], v)) return false;
        if ((adj_[v] & ~vertices()) != 0) return false;
        bool symmetric = true;
        for_each_vertex(adj_[v], [&](Vertex u) { symmetric = symmetric && contains(adj_[u], v); });
        if (!symmetric) return false;
        twice += degree(v);
    }
    for (Vertex v = n_; v < kMaxVertices; ++v)
        if (adj_[v] != 0) return false;
    return twice == 2 * m_;
}

}  // namespace satforge
