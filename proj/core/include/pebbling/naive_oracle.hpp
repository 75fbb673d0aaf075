#pragma once

#include <queue>
#include <set>
#include <vector>

#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Reference decision procedure: breadth-first exploration of the entire
/// reachable configuration space, no pruning and no shared state with the
/// production solver. Exponential; only for cross-validation on tiny inputs.
inline bool naive_k_solvable(const Graph& g, const Distribution& d, int root, int k) {
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> frontier;
    seen.insert(d.counts);
    frontier.push(d.counts);
    while (!frontier.empty()) {
        std::vector<int> cfg = frontier.front();
        frontier.pop();
        if (cfg[static_cast<size_t>(root)] >= k) return true;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (cfg[static_cast<size_t>(u)] < 2) continue;
            for (int v : g.neighbors(u)) {
                std::vector<int> child = cfg;
                child[static_cast<size_t>(u)] -= 2;
                child[static_cast<size_t>(v)] += 1;
                if (seen.insert(child).second) frontier.push(child);
            }
        }
    }
    return false;
}

inline bool naive_solvable(const Graph& g, const Distribution& d) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!naive_k_solvable(g, d, v, 1)) return false;
    }
    return true;
}

} // namespace pebbling
