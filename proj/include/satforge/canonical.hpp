#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "satforge/graph.hpp"

namespace satforge {

inline constexpr int kMaxCanonicalVertices = 16;

/// Isomorphism-invariant code: the upper triangle of the adjacency matrix under the
/// labeling that maximizes it, row-major and most significant bit first.
struct CanonicalCode {
    int n = 0;
    std::array<std::uint64_t, 2> bits{};

    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;

    std::string bytes() const;
    Graph graph() const;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept;
};

/// perm[old] = new label of the canonical relabeling. Throws std::invalid_argument for n > 16.
std::vector<Vertex> canonical_labeling(const Graph& g);
CanonicalCode canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

}  // namespace satforge
