#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pebbling/distribution.hpp"
#include "pebbling/domination.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Paths Q_1..Q_m, each ending at the root, whose vertices jointly cover V.
/// Path i is stored far-end-first; lengths[i] is its edge count.
struct PathSet {
    int root = 0;
    std::vector<std::vector<int>> paths;
    std::vector<int> lengths;
};

/// Q_1 runs from a most-distant vertex to the root; every vertex left
/// uncovered then contributes its own shortest path to the root. All path
/// choices are shortest paths with smallest-index tie-breaking, so the
/// result is deterministic. Guarantees m <= n - ecc(root) and every length
/// <= ecc(root).
PathSet build_path_set(const Graph& g, const GraphMetrics& m, int root);

/// sum_i (2^len_i - 1) + 1: any distribution of this size puts 2^len pebbles
/// on some path, which then delivers to the root.
std::int64_t path_set_bound(const PathSet& ps);

/// Far-to-near halving along a single path (far-end-first, ending at the
/// target). Returns the moves if one pebble reaches the end using only the
/// path's own pebbles and edges, else nullopt. Always succeeds when the path
/// carries at least 2^length pebbles.
std::optional<MoveSequence> path_transport(const Graph& g, const Distribution& d,
                                           const std::vector<int>& path);

/// k paths of length ecc(root), one per distinct most-distant terminal,
/// pairwise sharing no vertex except the root. k is maximized by exhaustive
/// search; k*ecc <= n-1 follows from disjointness.
struct RootDisjointPathSystem {
    int root = 0;
    std::vector<int> terminals;
    std::vector<std::vector<int>> paths; // stored root-first
};

RootDisjointPathSystem build_root_disjoint_system(const Graph& g, const GraphMetrics& m, int root);

/// Cells A_1..A_gamma built around dominating-set members. The efficient
/// variant uses closed neighborhoods, which partition V; the general variant
/// subtracts earlier neighborhoods and adds the connector w_i on a shortest
/// root-to-center path. Cells are sorted; every cell has diameter <= 2.
struct Decomposition {
    int root = -1;               // -1 for the efficient variant (root-free)
    std::vector<int> centers;
    std::vector<int> connectors; // empty for the efficient variant
    std::vector<std::vector<int>> cells;
};

/// Requires cert.kind == efficient (errc::not_efficient otherwise).
Decomposition build_decomposition_thm3(const Graph& g, const DominationCertificate& cert);

/// Requires a dominating cert (errc::not_dominating otherwise). Verifies the
/// cells cover V, have diameter <= 2, satisfy sum |A_i| <= n + gamma, and
/// that the root sits in a cell or within d-1 of its connector.
Decomposition build_decomposition_thm4(const Graph& g, const GraphMetrics& m, int root,
                                       const DominationCertificate& cert);

/// sum_i (2^(d+1) + |A_i| - 4) + 1: the pigeonhole count certified by a
/// decomposition with ambient diameter d.
std::int64_t decomposition_bound(const Decomposition& dec, int diameter);

/// Greedy k-pebble delivery inside a star subgraph: pair pebbles from the
/// leaves onto the center, then push pairs from the center to the target.
/// Optimal on stars; succeeds on every distribution of size 4k + m - 3 where
/// m = 1 + |leaves|. Counts outside the star are ignored.
std::optional<MoveSequence> star_k_transport(const Graph& g, int center,
                                             const std::vector<int>& leaves,
                                             const Distribution& d, int target, int k);

} // namespace pebbling
