#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pebbling/distribution.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Caps on the exact search. Exceeding any cap aborts with BudgetExceeded
/// carrying the bracket proven so far; the search never degrades silently.
struct SearchBudget {
    int max_n = 12;
    std::int64_t max_pebbles = 50'000;
    std::int64_t max_configs = 50'000'000;
};

struct SolveCertificate {
    int root = 0;
    int k = 1;
    Distribution dist;
    MoveSequence moves;
};

/// Exact pebbling value together with the evidence the search produced:
/// a maximal unsolvable witness at size value-1 and a few replayable
/// solvable certificates at size value.
struct ExactResult {
    std::int64_t value = 0;
    int k = 1;
    int witness_root = 0;
    Distribution witness;
    std::vector<std::int64_t> per_root; // rooted values; empty for rooted queries
    std::vector<SolveCertificate> spot_checks;
};

/// Replays moves from an initial distribution. Returns the final
/// distribution, or nullopt if any step is illegal (non-edge or fewer than
/// two pebbles on the source).
std::optional<Distribution> replay_moves(const Graph& g, const Distribution& d,
                                         const MoveSequence& moves);

/// True iff the moves replay legally and finish with at least k pebbles on root.
bool verify_certificate(const Graph& g, const Distribution& d, int root, int k,
                        const MoveSequence& moves);

/// Exact solvability decisions and pebbling numbers for one graph.
///
/// Decision procedure: depth-first search over configurations, memoized per
/// (root, k). A configuration with a vertex holding k*2^dist(v,root) pebbles
/// is solvable outright; one whose distance-weighted potential is below k is
/// unsolvable outright; a cheap tree-greedy probe resolves most solvable
/// configurations without expansion. Unsolvable distributions are closed
/// downward, so exact values are found by scanning the finite box below the
/// per-vertex solvability thresholds, largest sizes first; the first
/// unsolvable distribution found is a maximum-size witness.
///
/// Instances share caches across queries; all results are deterministic.
class Solver {
public:
    explicit Solver(const Graph& g, SearchBudget budget = {});
    ~Solver();

    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    const Graph& graph() const;
    const GraphMetrics& metric() const;

    /// Can k pebbles be accumulated on root? Fills *moves with a replayable
    /// certificate when true and moves != nullptr. The certificate depends
    /// only on (d, root, k), not on cache state.
    bool is_k_solvable(const Distribution& d, int root, int k = 1, MoveSequence* moves = nullptr);

    /// v-solvable for every vertex v with k = 1.
    bool is_solvable(const Distribution& d);

    /// Smallest N such that every size-N distribution is k-solvable for root.
    ExactResult rooted_pebbling_number(int root, int k = 1);

    /// Max over roots of the rooted value; witness taken from the worst root
    /// (smallest index on ties).
    ExactResult pebbling_number(int k = 1);

    /// The two canonical unsolvable distributions for root: (a) nothing on
    /// root, one pebble everywhere else; (b) 2^dist(root,w)-1 pebbles on the
    /// smallest-index vertex w at maximum distance from root.
    std::vector<Distribution> witness_distributions(int root) const;

    std::int64_t configs_visited() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Free-function forms; each call builds a fresh Solver.
bool is_k_solvable(const Graph& g, const Distribution& d, int root, int k = 1,
                   MoveSequence* moves = nullptr, const SearchBudget& budget = {});
bool is_solvable(const Graph& g, const Distribution& d, const SearchBudget& budget = {});
ExactResult rooted_pebbling_number(const Graph& g, int root, int k = 1,
                                   const SearchBudget& budget = {});
ExactResult pebbling_number(const Graph& g, int k = 1, const SearchBudget& budget = {});
std::vector<Distribution> witness_distributions(const Graph& g, int root);

} // namespace pebbling
