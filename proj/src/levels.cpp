#include "satforge/levels.hpp"

#include <cstdlib>
#include <string>

namespace satforge {

LevelPartition::LevelPartition(Vertex root, std::vector<VertexSet> levels)
    : root_(root), levels_(std::move(levels)) {
    level_of_.fill(0);
    for (std::size_t i = 0; i < levels_.size(); ++i)
        for_each_vertex(levels_[i], [&](Vertex v) { level_of_[v] = static_cast<int>(i) + 1; });
}

VertexSet LevelPartition::level_set(int i) const {
    if (i < 1 || i > depth()) return 0;
    return levels_[i - 1];
}

bool LevelPartition::is_valid_for(const Graph& g) const {
    if (levels_.empty() || level_set(1) != g.closed_neighbors(root_)) return false;
    VertexSet seen = 0;
    for (const VertexSet s : levels_) {
        if ((seen & s) != 0) return false;
        seen |= s;
    }
    if (seen != g.vertices()) return false;
    for (int i = 2; i <= depth(); ++i) {
        bool ok = true;
        for_each_vertex(level_set(i), [&](Vertex x) { ok = ok && count_in(g, x, i - 1) > 0; });
        if (!ok) return false;
    }
    for (auto [u, v] : g.edges()) {
        if (std::abs(level(u) - level(v)) > 1) return false;
    }
    return true;
}

LevelPartition bfs_levels(const Graph& g, Vertex root, int max_level) {
    if (root < 0 || root >= g.order()) {
        throw LevelError(LevelError::Kind::bad_root, root, "root " + std::to_string(root) + " out of range");
    }
    std::vector<VertexSet> levels;
    VertexSet seen = g.closed_neighbors(root);
    levels.push_back(seen);
    VertexSet frontier = g.neighbors(root);
    while (true) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
        next &= ~seen;
        if (next == 0) break;
        levels.push_back(next);
        seen |= next;
        frontier = next;
    }
    if (seen != g.vertices()) {
        const Vertex lost = std::countr_zero(g.vertices() & ~seen);
        throw LevelError(LevelError::Kind::disconnected, lost,
                         "vertex " + std::to_string(lost) + " is unreachable from root " + std::to_string(root));
    }
    if (static_cast<int>(levels.size()) > max_level) {
        const Vertex deep = std::countr_zero(levels[max_level]);
        throw LevelError(LevelError::Kind::overflow, deep,
                         "vertex " + std::to_string(deep) + " lies at distance " + std::to_string(max_level + 1) +
                             " > " + std::to_string(max_level) + " from root " + std::to_string(root));
    }
    return LevelPartition(root, std::move(levels));
}

}  // namespace satforge
