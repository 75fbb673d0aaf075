#include <random>

#include "doctest.h"
#include "pebbling/solver.hpp"
#include "test_support.hpp"

using namespace pebbling;

TEST_CASE("is_k_solvable basics on P_3") {
    const Graph p3 = generate("path:3");
    // 2^d pebbles at distance d reach the far end
    MoveSequence moves;
    CHECK(is_k_solvable(p3, Distribution({4, 0, 0}), 2, 1, &moves));
    CHECK(verify_certificate(p3, Distribution({4, 0, 0}), 2, 1, moves));
    // 2^d - 1 do not
    CHECK_FALSE(is_k_solvable(p3, Distribution({3, 0, 0}), 2, 1));
    // pebbles already in place: empty certificate
    moves.clear();
    CHECK(is_k_solvable(p3, Distribution({0, 0, 2}), 2, 2, &moves));
    CHECK(moves.empty());
}

TEST_CASE("is_solvable") {
    const Graph k3 = generate("complete:3");
    CHECK(is_solvable(k3, Distribution({1, 1, 1})));
    // size n-1 with an empty vertex is unsolvable for that vertex
    CHECK_FALSE(is_k_solvable(k3, Distribution({0, 1, 1}), 0, 1));
    CHECK_FALSE(is_solvable(k3, Distribution({0, 1, 1})));
    CHECK(is_solvable(generate("path:2"), Distribution({2, 0})));
}

TEST_CASE("rooted pebbling numbers") {
    CHECK(rooted_pebbling_number(generate("path:4"), 3).value == 8);
    CHECK(rooted_pebbling_number(generate("complete:4"), 0).value == 4);
    // star center needs less than the leaves: f(K_{1,3}) = 5, rooted center = 4
    const Graph star3 = generate("star:3");
    CHECK(rooted_pebbling_number(star3, 0).value == 4);
    CHECK(pebbling_number(star3).value == 5);
}

TEST_CASE("pebbling numbers of the classic families") {
    CHECK(pebbling_number(generate("path:5")).value == 16);
    CHECK(pebbling_number(generate("star:3")).value == 5);
    CHECK(pebbling_number(generate("doublestar:4")).value == 10);
    CHECK(pebbling_number(generate("complete:1")).value == 1);
}

TEST_CASE("witness distributions") {
    const Graph p3 = generate("path:3");
    const auto wp3 = witness_distributions(p3, 2);
    REQUIRE(wp3.size() == 2);
    CHECK(wp3[0].counts == std::vector<int>{1, 1, 0});
    CHECK(wp3[1].counts == std::vector<int>{3, 0, 0});

    const Graph k3 = generate("complete:3");
    const auto wk3 = witness_distributions(k3, 0);
    CHECK(wk3[0].counts == std::vector<int>{0, 1, 1});
    // one pebble on the smallest-index vertex at maximum distance
    CHECK(wk3[1].counts == std::vector<int>{0, 1, 0});

    // antipodal leaf of the double star carries 2^3 - 1
    const Graph ds = generate("doublestar:4");
    const auto wds = witness_distributions(ds, 2); // root = a leaf of center 0
    CHECK(wds[1].size() == 7);
    CHECK(wds[1][4] == 7); // smallest-index leaf of center 1

    for (const auto& [g, root] : {std::pair<Graph, int>{p3, 2}, {k3, 0}, {ds, 2}}) {
        for (const Distribution& w : witness_distributions(g, root))
            CHECK_FALSE(is_k_solvable(g, w, root, 1));
    }
}

TEST_CASE("solver agrees with the oracle exhaustively for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const Graph& g : test::all_connected_graphs(n)) {
            Solver solver(g);
            for (std::int64_t size = 0; size <= 6; ++size) {
                test::for_each_distribution(n, size, [&](const Distribution& d) {
                    for (int root = 0; root < n; ++root)
                        for (int k = 1; k <= 2; ++k)
                            CHECK(solver.is_k_solvable(d, root, k) ==
                                  naive_k_solvable(g, d, root, k));
                    return false;
                });
            }
        }
    }
}

TEST_CASE("solver agrees with the oracle on random n = 5 instances") {
    const auto graphs = test::all_connected_graphs(5);
    std::mt19937 rng(98765);
    std::uniform_int_distribution<size_t> graph_pick(0, graphs.size() - 1);
    std::uniform_int_distribution<int> size_pick(0, 10);
    std::uniform_int_distribution<int> vertex_pick(0, 4);
    std::uniform_int_distribution<int> k_pick(1, 2);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph& g = graphs[graph_pick(rng)];
        Distribution d(5);
        const int size = size_pick(rng);
        for (int i = 0; i < size; ++i) d[vertex_pick(rng)] += 1;
        const int root = vertex_pick(rng);
        const int k = k_pick(rng);
        CHECK(is_k_solvable(g, d, root, k) == naive_k_solvable(g, d, root, k));
    }
}

TEST_CASE("exact values agree with pure oracle enumeration on tiny graphs") {
    for (const char* spec : {"path:3", "cycle:4", "cycle:5", "complete:4", "star:2"}) {
        const Graph g = generate(spec);
        CHECK(pebbling_number(g).value == test::oracle_pebbling_number(g));
    }
    const Graph p3 = generate("path:3");
    for (int root = 0; root < 3; ++root)
        CHECK(rooted_pebbling_number(p3, root).value ==
              test::oracle_rooted_pebbling_number(p3, root));
}

TEST_CASE("solver agrees with the oracle on sampled n = 6 instances") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<unsigned> mask_pick(0, (1u << 15) - 1);
    std::uniform_int_distribution<int> size_pick(0, 6);
    std::uniform_int_distribution<int> vertex_pick(0, 5);
    int done = 0;
    while (done < 40) {
        std::vector<Edge> edges;
        const unsigned mask = mask_pick(rng);
        int bit = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j, ++bit)
                if (mask & (1u << bit)) edges.emplace_back(i, j);
        try {
            const Graph g(6, edges);
            Distribution d(6);
            const int size = size_pick(rng);
            for (int i = 0; i < size; ++i) d[vertex_pick(rng)] += 1;
            const int root = vertex_pick(rng);
            CHECK(is_k_solvable(g, d, root, 1) == naive_k_solvable(g, d, root, 1));
            ++done;
        } catch (const Error&) {
            // disconnected mask, draw again
        }
    }
}

TEST_CASE("witness bracketing and downward closure") {
    for (const char* spec : {"path:4", "star:3", "cycle:5"}) {
        const Graph g = generate(spec);
        Solver solver(g);
        const ExactResult res = solver.pebbling_number();
        CHECK(res.witness.size() == res.value - 1);
        CHECK_FALSE(solver.is_k_solvable(res.witness, res.witness_root, 1));
        // removing any one pebble keeps it unsolvable
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (res.witness[v] == 0) continue;
            Distribution smaller = res.witness;
            smaller[v] -= 1;
            CHECK_FALSE(solver.is_k_solvable(smaller, res.witness_root, 1));
        }
    }
}

TEST_CASE("k-pebbling monotonicity and the P_2 closed form") {
    for (const char* spec : {"star:3", "path:3", "cycle:4"}) {
        const Graph g = generate(spec);
        std::int64_t prev = 0;
        for (int k = 1; k <= 3; ++k) {
            const std::int64_t fk = pebbling_number(g, k).value;
            CHECK(fk >= prev);
            prev = fk;
        }
        CHECK(pebbling_number(g, 1).value == pebbling_number(g).value);
    }
    const Graph p2 = generate("path:2");
    for (int k = 1; k <= 3; ++k) {
        CHECK(pebbling_number(p2, k).value == 2 * k);
        CHECK(pebbling_number(p2, k).value == test::oracle_pebbling_number_k(p2, k));
    }
}

TEST_CASE("certificates and replay validation") {
    const Graph ds = generate("doublestar:4");
    Solver solver(ds);
    const ExactResult res = solver.pebbling_number();
    CHECK(res.value == 10);
    CHECK(res.per_root.size() == 6);
    std::int64_t max_rooted = 0;
    for (std::int64_t v : res.per_root) max_rooted = std::max(max_rooted, v);
    CHECK(max_rooted == res.value);
    REQUIRE(!res.spot_checks.empty());
    for (const SolveCertificate& cert : res.spot_checks) {
        CHECK(cert.dist.size() == res.value);
        CHECK(verify_certificate(ds, cert.dist, cert.root, cert.k, cert.moves));
    }

    // replay rejects corrupted sequences
    const Distribution d({4, 0, 0, 0, 0, 0});
    MoveSequence moves;
    REQUIRE(solver.is_k_solvable(d, 1, 1, &moves));
    REQUIRE(verify_certificate(ds, d, 1, 1, moves));
    MoveSequence illegal = moves;
    illegal.push_back({5, 4}); // not an edge
    CHECK_FALSE(verify_certificate(ds, d, 1, 1, illegal));
    MoveSequence starved = moves;
    starved.insert(starved.begin(), {1, 0}); // vertex 1 has no pebbles yet
    CHECK_FALSE(verify_certificate(ds, d, 1, 1, starved));
    CHECK_FALSE(verify_certificate(ds, d, 0, 5, moves)); // wrong goal
}

TEST_CASE("budget aborts carry a bracket") {
    const Graph p7 = generate("path:7");
    SearchBudget tiny;
    tiny.max_configs = 500;
    try {
        pebbling_number(p7, 1, tiny);
        CHECK(false);
    } catch (const BudgetExceeded& e) {
        CHECK(e.lower() >= 64); // 2^(n-1) witness pile is known up front
        CHECK(e.lower() <= e.upper());
    }
    SearchBudget small_n;
    small_n.max_n = 4;
    CHECK_THROWS_AS(pebbling_number(generate("path:5"), 1, small_n), Error);
}

TEST_CASE("solver determinism across instances") {
    const Graph g = generate("cycle:5");
    Solver a(g), b(g);
    const ExactResult ra = a.pebbling_number();
    const ExactResult rb = b.pebbling_number();
    CHECK(ra.value == rb.value);
    CHECK(ra.witness == rb.witness);
    CHECK(ra.witness_root == rb.witness_root);
    CHECK(ra.per_root == rb.per_root);
    REQUIRE(ra.spot_checks.size() == rb.spot_checks.size());
    for (size_t i = 0; i < ra.spot_checks.size(); ++i) {
        CHECK(ra.spot_checks[i].dist == rb.spot_checks[i].dist);
        CHECK(ra.spot_checks[i].moves == rb.spot_checks[i].moves);
    }
}

TEST_CASE("input validation") {
    const Graph p3 = generate("path:3");
    CHECK_THROWS_AS(is_k_solvable(p3, Distribution({1, 1}), 0, 1), Error);
    CHECK_THROWS_AS(is_k_solvable(p3, Distribution({-1, 0, 0}), 0, 1), Error);
    CHECK_THROWS_AS(is_k_solvable(p3, Distribution({1, 1, 1}), 5, 1), Error);
    CHECK_THROWS_AS(is_k_solvable(p3, Distribution({1, 1, 1}), 0, 0), Error);
    CHECK_THROWS_AS(witness_distributions(p3, 9), Error);
    // the 2^dist-1 pile would overflow 32-bit counts on a long path
    CHECK_THROWS_AS(witness_distributions(generate("path:40"), 0), Error);
}
