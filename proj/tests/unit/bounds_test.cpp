#include "doctest.h"
#include "pebbling/bounds.hpp"

using namespace pebbling;

TEST_CASE("trivial bounds") {
    auto [lo1, up1] = trivial_bounds(5, 1);
    CHECK(lo1.value == 5);
    CHECK(up1.value == 5); // sharp on the complete graph

    auto [lo2, up2] = trivial_bounds(5, 4);
    CHECK(lo2.value == 16);
    CHECK(up2.value == 61);

    auto [lo3, up3] = trivial_bounds(2, 1);
    CHECK(lo3.value == 2);
    CHECK(up3.value == 2);

    auto [lo4, up4] = trivial_bounds(1, 0);
    CHECK(lo4.value == 1);
    CHECK(up4.value == 1);

    CHECK_THROWS_AS(trivial_bounds(5, 5), Error);
    CHECK_THROWS_AS(trivial_bounds(5, 0), Error);
    CHECK_THROWS_AS(trivial_bounds(1, 1), Error);
}

TEST_CASE("thm1") {
    CHECK(thm1_bound(5, 1).value == 5);
    CHECK(thm1_bound(5, 4).value == 16);
    CHECK(thm1_bound(6, 3).value == 22);
    CHECK(thm1_bound(1, 0).value == 1);
}

TEST_CASE("thm2") {
    CHECK(thm2_bound(5, 1).value == 5);
    CHECK(thm2_bound(5, 4).value == 37); // above f(P_5) = 16: not sharp on paths
    // (n + floor((n-1)/d) - 1) * 2^(d-1) - n + 2 at n=6, d=3:
    // (6 + 1 - 1) * 4 - 6 + 2 = 20; cross-checked below via the eq1 identity
    CHECK(thm2_bound(6, 3).value == 20);
    // identity: eq1_upper - thm2 = (n - 1 - floor((n-1)/d)) * 2^(d-1)
    for (std::int64_t n = 2; n <= 12; ++n) {
        for (std::int64_t d = 1; d <= n - 1; ++d) {
            const std::int64_t eq1u = trivial_bounds(n, d).upper.value;
            const std::int64_t c = (n - 1) / d;
            CHECK(thm2_bound(n, d).value == eq1u - (n - 1 - c) * (std::int64_t{1} << (d - 1)));
        }
    }
    CHECK(thm2_bound(6, 1).value == thm1_bound(6, 1).value);
}

TEST_CASE("thm3") {
    for (std::int64_t n = 2; n <= 6; ++n) CHECK(thm3_bound(n, 1, 1).value == n + 1);
    CHECK(thm3_bound(5, 2, 1).value == 10); // star with 4 leaves: 4+6
    CHECK(thm3_bound(3, 2, 1).value == 8);  // P_3 with the middle vertex
    CHECK_FALSE(thm3_bound(5, 2, std::nullopt).applicable);
    CHECK(thm3_bound(1, 0, 1).value == 1);
    CHECK_THROWS_AS(thm3_bound(5, 2, 9), Error);
}

TEST_CASE("thm4") {
    CHECK(thm4_bound(6, 3, 2).value == 33);  // double star, 4 leaves: 4+29
    CHECK(thm4_bound(4, 3, 2).value == 31);  // double star, 2 leaves: 2+29
    for (std::int64_t n = 2; n <= 6; ++n) CHECK(thm4_bound(n, 1, 1).value == n + 2);
    for (std::int64_t r = 2; r <= 5; ++r) CHECK(thm4_bound(r + 1, 2, 1).value == r + 7);
    CHECK_THROWS_AS(thm4_bound(5, 2, 0), Error);
}

TEST_CASE("moews star formula") {
    CHECK(moews_star(1, 4) == 5); // f(K_{1,3}) = 3 + 2
    CHECK(moews_star(2, 4) == 9);
    CHECK(moews_star(3, 5) == 14);
    // m = 2 degenerates to a single edge: formula says 3, f_1(P_2) = 2
    CHECK(moews_star(1, 2) == 3);
    CHECK_FALSE(moews_star_verified_domain(2));
    CHECK(moews_star_verified_domain(3));
    CHECK_THROWS_AS(moews_star(0, 4), Error);
    CHECK_THROWS_AS(moews_star(1, 1), Error);
}

TEST_CASE("pachter diameter-2 bound") {
    const BoundValue ok = pachter_diam2_bound(5, 2);
    CHECK(ok.applicable);
    CHECK(ok.value == 6);
    CHECK_FALSE(pachter_diam2_bound(5, 3).applicable);
    CHECK_FALSE(pachter_diam2_bound(5, 1).applicable);
}

TEST_CASE("phi monotonicity") {
    CHECK(phi_monotone_check(2)); // vacuous range
    CHECK(phi_monotone_check(5));
    CHECK(phi_monotone_check(10));
    for (std::int64_t n = 2; n <= 40; ++n) CHECK(phi_monotone_check(n));
    CHECK_THROWS_AS(phi_monotone_check(1), Error);
}

TEST_CASE("comparison predicates") {
    // d=2, gamma=2, n=12: eq4 asks gamma <= (2n-3)/5 = 4.2
    const auto p1 = comparison_predicates(12, 2, 2, 2);
    CHECK(p1.eq4.applicable);
    CHECK(p1.eq4.holds);

    // d=1: the thm3-side predicates have a vanishing denominator
    const auto p2 = comparison_predicates(6, 1, 1, 1);
    CHECK_FALSE(p2.eq3.applicable);
    CHECK_FALSE(p2.eq5.applicable);
    CHECK_FALSE(p2.eq7.applicable);
    CHECK(p2.eq4.applicable);

    const auto p3 = comparison_predicates(10, 3, 3, std::nullopt);
    CHECK(p3.eq4.holds); // gamma = 3 <= 53/13
    CHECK_FALSE(p3.eq3.applicable); // no efficient set

    // exact rational boundary: d=2 makes eq4 read gamma <= (2n-3)/5;
    // n=14 puts the threshold exactly at 5
    const auto boundary = comparison_predicates(14, 2, 5, std::nullopt);
    CHECK(boundary.eq4.holds);
    const auto beyond = comparison_predicates(14, 2, 6, std::nullopt);
    CHECK_FALSE(beyond.eq4.holds);
}

TEST_CASE("best bound selection") {
    // complete:6 -> eq1u = thm1 = thm2 = 6; tie order prefers thm2
    const BestBound k6 = best_upper_bound(6, 1, 1, 1);
    CHECK(k6.value == 6);
    CHECK(k6.name == "thm2");

    // star:4 -> pachter 6 beats thm3 10
    const BestBound s4 = best_upper_bound(5, 2, 1, 1);
    CHECK(s4.value == 6);
    CHECK(s4.name == "pachter");

    // doublestar:4 -> thm2 = 20 wins (thm1 22, thm4 33, eq1u 36)
    const BestBound ds = best_upper_bound(6, 3, 2, std::nullopt);
    CHECK(ds.value == 20);
    CHECK(ds.name == "thm2");

    const auto ladder = bound_ladder(6, 3, 2, std::nullopt);
    REQUIRE(ladder.size() == 6);
    CHECK(ladder[0].name == "pachter");
    CHECK_FALSE(ladder[0].applicable);
    CHECK(ladder[4].name == "thm1");
    CHECK(ladder[4].value == 22);
    CHECK(ladder[5].value == 36);
}

TEST_CASE("overflow guards") {
    CHECK_THROWS_AS(trivial_bounds(64, 63), Error); // 63*(2^63-1)+1 leaves int64
    CHECK(trivial_bounds(40, 39).upper.value > 0);  // grid maximum stays in range
    CHECK_THROWS_AS(thm1_bound(90, 85), Error);
}

TEST_CASE("bound values echo their inputs") {
    const BoundValue b = thm3_bound(5, 2, 1);
    REQUIRE(b.inputs.size() == 3);
    CHECK(b.inputs[0] == std::pair<std::string, std::int64_t>{"n", 5});
    CHECK(b.inputs[2] == std::pair<std::string, std::int64_t>{"gamma_eff", 1});
}
