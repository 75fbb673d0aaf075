#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/errors.hpp"

namespace pebbling {

/// One evaluated bound. `value` is meaningful iff `applicable`; `inputs`
/// echoes exactly the quantities the formula consumed.
struct BoundValue {
    std::string name;
    bool applicable = false;
    std::int64_t value = 0;
    std::vector<std::pair<std::string, std::int64_t>> inputs;

    bool operator==(const BoundValue&) const = default;
};

struct TrivialBounds {
    BoundValue lower; // max{n, 2^d}
    BoundValue upper; // (n-1)(2^d-1)+1
};

// All calculators take the vertex count n and diameter d and enforce
// 1 <= d <= n-1 for n >= 2 (invalid_invariants otherwise). The single-vertex
// graph is the convention f = 1: n == 1 requires d == 0 and every bound
// reports 1. Arithmetic is checked; values that would leave int64 raise
// errc::overflow instead of wrapping.

TrivialBounds trivial_bounds(std::int64_t n, std::int64_t d);

/// (n-d)(2^d-1)+1
BoundValue thm1_bound(std::int64_t n, std::int64_t d);

/// (n + floor((n-1)/d) - 1) * 2^(d-1) - n + 2
BoundValue thm2_bound(std::int64_t n, std::int64_t d);

/// 2^(d+1)*g + n - 4g + 1 with g the size of an efficient dominating set;
/// inapplicable when the graph has none (gamma_eff == nullopt).
BoundValue thm3_bound(std::int64_t n, std::int64_t d, std::optional<std::int64_t> gamma_eff);

/// 2^(d+1)*g + n - 3g + 1 with g the domination number.
BoundValue thm4_bound(std::int64_t n, std::int64_t d, std::int64_t gamma);

/// n+1, applicable iff d == 2.
BoundValue pachter_diam2_bound(std::int64_t n, std::int64_t d);

/// k-pebbling number of the star on m vertices: 4k + m - 3. Requires k >= 1
/// and m >= 2. The m == 2 case degenerates to a single edge where the
/// formula does not apply; callers gate on moews_star_verified_domain.
std::int64_t moews_star(std::int64_t k, std::int64_t m);
inline bool moews_star_verified_domain(std::int64_t m) { return m >= 3; }

/// phi(j) = (n-j)(2^j-1) checked nondecreasing over integers 1 <= j <= n-2.
bool phi_monotone_check(std::int64_t n);

struct PredicateResult {
    bool applicable = false;
    bool holds = false;

    bool operator==(const PredicateResult&) const = default;
};

/// The six bound-comparison predicates, each an exact rational test of
/// gamma <= numerator/denominator (no floating point):
///   eq3: thm3 improves on the trivial upper bound   (needs d >= 2)
///   eq4: thm4 improves on the trivial upper bound
///   eq5: thm3 improves on thm1                      (needs d >= 2)
///   eq6: thm4 improves on thm1
///   eq7: thm3 improves on thm2                      (needs d >= 2)
///   eq8: thm4 improves on thm2
/// eq3/5/7 compare gamma_eff and are also inapplicable without an efficient
/// dominating set. eq7/eq8 are sufficient conditions, not exact thresholds.
struct ComparisonPredicates {
    PredicateResult eq3, eq4, eq5, eq6, eq7, eq8;
};

ComparisonPredicates comparison_predicates(std::int64_t n, std::int64_t d, std::int64_t gamma,
                                           std::optional<std::int64_t> gamma_eff);

struct BestBound {
    std::string name;
    std::int64_t value = 0;
};

/// Minimum over the applicable upper bounds; ties broken by the fixed order
/// pachter, thm3, thm4, thm2, thm1, eq1.
BestBound best_upper_bound(std::int64_t n, std::int64_t d, std::int64_t gamma,
                           std::optional<std::int64_t> gamma_eff);

/// All upper bounds in the tie-break order used for best-bound selection.
std::vector<BoundValue> bound_ladder(std::int64_t n, std::int64_t d, std::int64_t gamma,
                                     std::optional<std::int64_t> gamma_eff);

} // namespace pebbling
