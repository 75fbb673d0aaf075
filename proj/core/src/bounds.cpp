#include "pebbling/bounds.hpp"

#include <algorithm>
#include <limits>

namespace pebbling {

namespace {

using int128 = __int128;

int128 pow2(std::int64_t e) {
    if (e < 0 || e > 80) throw Error(errc::overflow, "2^" + std::to_string(e) + " out of range");
    return int128{1} << e;
}

std::int64_t narrow(int128 v, const char* what) {
    if (v > int128{std::numeric_limits<std::int64_t>::max()} ||
        v < int128{std::numeric_limits<std::int64_t>::min()})
        throw Error(errc::overflow, std::string(what) + " exceeds the 64-bit range");
    return static_cast<std::int64_t>(v);
}

void check_nd(std::int64_t n, std::int64_t d) {
    if (n < 1) throw Error(errc::invalid_invariants, "n must be at least 1");
    if (n == 1) {
        if (d != 0) throw Error(errc::invalid_invariants, "n = 1 requires d = 0");
        return;
    }
    if (d < 1 || d > n - 1)
        throw Error(errc::invalid_invariants,
                    "need 1 <= d <= n-1, got n = " + std::to_string(n) + ", d = " + std::to_string(d));
}

void check_gamma(std::int64_t n, std::int64_t gamma, const char* name) {
    if (gamma < 1 || gamma > n)
        throw Error(errc::invalid_invariants, std::string(name) + " must be in [1, n]");
}

BoundValue make(std::string name, std::int64_t value,
                std::vector<std::pair<std::string, std::int64_t>> inputs) {
    return BoundValue{std::move(name), true, value, std::move(inputs)};
}

BoundValue not_applicable(std::string name,
                          std::vector<std::pair<std::string, std::int64_t>> inputs) {
    return BoundValue{std::move(name), false, 0, std::move(inputs)};
}

} // namespace

TrivialBounds trivial_bounds(std::int64_t n, std::int64_t d) {
    check_nd(n, d);
    if (n == 1)
        return {make("eq1_lower", 1, {{"n", n}, {"d", d}}),
                make("eq1_upper", 1, {{"n", n}, {"d", d}})};
    const std::int64_t lower = narrow(std::max<int128>(int128{n}, pow2(d)), "eq1 lower");
    const std::int64_t upper = narrow((int128{n} - 1) * (pow2(d) - 1) + 1, "eq1 upper");
    return {make("eq1_lower", lower, {{"n", n}, {"d", d}}),
            make("eq1_upper", upper, {{"n", n}, {"d", d}})};
}

BoundValue thm1_bound(std::int64_t n, std::int64_t d) {
    check_nd(n, d);
    if (n == 1) return make("thm1", 1, {{"n", n}, {"d", d}});
    return make("thm1", narrow((int128{n} - d) * (pow2(d) - 1) + 1, "thm1"),
                {{"n", n}, {"d", d}});
}

BoundValue thm2_bound(std::int64_t n, std::int64_t d) {
    check_nd(n, d);
    if (n == 1) return make("thm2", 1, {{"n", n}, {"d", d}});
    const std::int64_t c = (n - 1) / d;
    return make("thm2", narrow((int128{n} + c - 1) * pow2(d - 1) - n + 2, "thm2"),
                {{"n", n}, {"d", d}});
}

BoundValue thm3_bound(std::int64_t n, std::int64_t d, std::optional<std::int64_t> gamma_eff) {
    check_nd(n, d);
    if (!gamma_eff) return not_applicable("thm3", {{"n", n}, {"d", d}});
    check_gamma(n, *gamma_eff, "gamma_eff");
    if (n == 1) return make("thm3", 1, {{"n", n}, {"d", d}, {"gamma_eff", *gamma_eff}});
    const int128 g = *gamma_eff;
    return make("thm3", narrow(pow2(d + 1) * g + n - 4 * g + 1, "thm3"),
                {{"n", n}, {"d", d}, {"gamma_eff", *gamma_eff}});
}

BoundValue thm4_bound(std::int64_t n, std::int64_t d, std::int64_t gamma) {
    check_nd(n, d);
    check_gamma(n, gamma, "gamma");
    if (n == 1) return make("thm4", 1, {{"n", n}, {"d", d}, {"gamma", gamma}});
    const int128 g = gamma;
    return make("thm4", narrow(pow2(d + 1) * g + n - 3 * g + 1, "thm4"),
                {{"n", n}, {"d", d}, {"gamma", gamma}});
}

BoundValue pachter_diam2_bound(std::int64_t n, std::int64_t d) {
    check_nd(n, d);
    if (n == 1) return not_applicable("pachter", {{"n", n}, {"d", d}});
    if (d != 2) return not_applicable("pachter", {{"n", n}, {"d", d}});
    return make("pachter", narrow(int128{n} + 1, "pachter"), {{"n", n}, {"d", d}});
}

std::int64_t moews_star(std::int64_t k, std::int64_t m) {
    if (k < 1) throw Error(errc::invalid_parameter, "moews_star needs k >= 1");
    if (m < 2) throw Error(errc::invalid_parameter, "moews_star needs a star on m >= 2 vertices");
    return narrow(4 * int128{k} + m - 3, "moews_star");
}

bool phi_monotone_check(std::int64_t n) {
    if (n < 2) throw Error(errc::invalid_parameter, "phi_monotone_check needs n >= 2");
    auto phi = [n](std::int64_t j) { return (int128{n} - j) * (pow2(j) - 1); };
    for (std::int64_t j = 1; j <= n - 2; ++j)
        if (phi(j + 1) < phi(j)) return false;
    return true;
}

ComparisonPredicates comparison_predicates(std::int64_t n, std::int64_t d, std::int64_t gamma,
                                           std::optional<std::int64_t> gamma_eff) {
    check_nd(n, d);
    ComparisonPredicates out;
    if (n == 1) return out; // all inapplicable by convention
    check_gamma(n, gamma, "gamma");
    if (gamma_eff) check_gamma(n, *gamma_eff, "gamma_eff");

    // gamma <= num/den with den > 0, decided as gamma*den <= num
    auto leq = [](std::int64_t g, int128 num, int128 den) { return int128{g} * den <= num; };

    const int128 num_vs_eq1 = (pow2(d) - 2) * n - (pow2(d) - 1);
    const int128 num_vs_thm1 = (pow2(d) - 2) * n - d * (pow2(d) - 1);
    const std::int64_t c = (n - 1) / d;
    const int128 num_vs_thm2 = (pow2(d - 1) - 2) * n - (int128{c} - 1) * pow2(d - 1) + 1;
    const int128 den3 = pow2(d + 1) - 4; // zero at d = 1
    const int128 den4 = pow2(d + 1) - 3;

    const bool thm3_ok = gamma_eff.has_value() && d >= 2;
    if (thm3_ok) {
        out.eq3 = {true, leq(*gamma_eff, num_vs_eq1, den3)};
        out.eq5 = {true, leq(*gamma_eff, num_vs_thm1, den3)};
        out.eq7 = {true, leq(*gamma_eff, num_vs_thm2, den3)};
    }
    out.eq4 = {true, leq(gamma, num_vs_eq1, den4)};
    out.eq6 = {true, leq(gamma, num_vs_thm1, den4)};
    out.eq8 = {true, leq(gamma, num_vs_thm2, den4)};
    return out;
}

std::vector<BoundValue> bound_ladder(std::int64_t n, std::int64_t d, std::int64_t gamma,
                                     std::optional<std::int64_t> gamma_eff) {
    return {pachter_diam2_bound(n, d), thm3_bound(n, d, gamma_eff), thm4_bound(n, d, gamma),
            thm2_bound(n, d),          thm1_bound(n, d),           trivial_bounds(n, d).upper};
}

BestBound best_upper_bound(std::int64_t n, std::int64_t d, std::int64_t gamma,
                           std::optional<std::int64_t> gamma_eff) {
    BestBound best;
    bool have = false;
    for (const BoundValue& b : bound_ladder(n, d, gamma, gamma_eff)) {
        if (!b.applicable) continue;
        if (!have || b.value < best.value) {
            best = {b.name, b.value};
            have = true;
        }
    }
    return best;
}

} // namespace pebbling
