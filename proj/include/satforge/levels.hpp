#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "satforge/graph.hpp"

namespace satforge {

class LevelError : public std::runtime_error {
public:
    enum class Kind { overflow, disconnected, bad_root };
    LevelError(Kind kind, Vertex vertex, const std::string& what)
        : std::runtime_error(what), kind_(kind), vertex_(vertex) {}
    Kind kind() const { return kind_; }
    Vertex vertex() const { return vertex_; }

private:
    Kind kind_;
    Vertex vertex_;
};

/// Distance layering around a root: V_1 is the closed neighborhood of the root and
/// V_i (i >= 2) holds the vertices at distance exactly i. Levels are 1-based.
class LevelPartition {
public:
    LevelPartition() = default;
    LevelPartition(Vertex root, std::vector<VertexSet> levels);

    Vertex root() const { return root_; }
    int depth() const { return static_cast<int>(levels_.size()); }
    /// V_i, empty for i outside 1..depth().
    VertexSet level_set(int i) const;
    int level(Vertex v) const { return level_of_[v]; }

    /// N_i(x) = N(x) ∩ V_i
    VertexSet neighbors_in(const Graph& g, Vertex x, int i) const { return g.neighbors(x) & level_set(i); }
    /// n_i(x) = |N_i(x)|
    int count_in(const Graph& g, Vertex x, int i) const { return popcount(neighbors_in(g, x, i)); }

    /// Re-derives the layering invariants from scratch.
    bool is_valid_for(const Graph& g) const;

private:
    Vertex root_ = 0;
    std::vector<VertexSet> levels_;
    std::array<int, kMaxVertices> level_of_{};
};

/// BFS layering from `root`. Throws LevelError if a vertex is unreachable or lies
/// beyond `max_level`.
LevelPartition bfs_levels(const Graph& g, Vertex root, int max_level);

}  // namespace satforge
