#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "satforge/graph.hpp"

namespace satforge {

/// A simple path or cycle given by its vertex sequence. Lengths count edges.
struct CyclePath {
    enum class Kind { cycle, path };

    std::vector<Vertex> vertices;
    Kind kind = Kind::path;

    int length() const {
        const int k = static_cast<int>(vertices.size());
        return kind == Kind::cycle ? k : k - 1;
    }
    VertexSet vertex_set() const;
    /// Distinct vertices, consecutive ones adjacent in `g` (and last-first for cycles).
    bool is_valid_in(const Graph& g) const;
    std::string str() const;

    auto operator<=>(const CyclePath&) const = default;
};

/// Visitor receives the full vertex sequence; returning false stops the walk.
using PathVisitor = std::function<bool(const std::vector<Vertex>&)>;

/// Walks every simple u-v path with exactly `len` edges whose internal vertices avoid
/// `forbidden`, in lexicographic order of the vertex sequence. Returns false if stopped.
bool for_each_path(const Graph& g, Vertex u, Vertex v, int len, VertexSet forbidden, const PathVisitor& visit);

/// All simple u-v paths with exactly `len` edges, lexicographically ordered.
std::vector<CyclePath> paths_between(const Graph& g, Vertex u, Vertex v, int len);

/// Lexicographically least u-v path with `len` edges avoiding `forbidden` internally.
std::optional<CyclePath> first_path(const Graph& g, Vertex u, Vertex v, int len, VertexSet forbidden = 0);

/// Allocation-free existence test used on hot paths.
bool has_path(const Graph& g, Vertex u, Vertex v, int len, VertexSet forbidden = 0);

/// A k-cycle of g if one exists. The witness starts at its least vertex.
std::optional<CyclePath> contains_cycle(const Graph& g, int k);

/// Whether v lies on some k-cycle.
bool on_cycle(const Graph& g, Vertex v, int k);

/// Number of 4-cycles (as subgraphs) passing through v.
int four_cycles_through(const Graph& g, Vertex v);

}  // namespace satforge
