#include <benchmark/benchmark.h>

#include "pebbling/bounds.hpp"
#include "pebbling/domination.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/verify.hpp"

namespace {

using namespace pebbling;

void BM_PebblingNumberPath(benchmark::State& state) {
    const Graph g = generate("path:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        Solver solver(g);
        benchmark::DoNotOptimize(solver.pebbling_number().value);
    }
}
BENCHMARK(BM_PebblingNumberPath)->DenseRange(3, 6);

void BM_PebblingNumberStar(benchmark::State& state) {
    const Graph g = generate("star:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        Solver solver(g);
        benchmark::DoNotOptimize(solver.pebbling_number().value);
    }
}
BENCHMARK(BM_PebblingNumberStar)->DenseRange(2, 5);

void BM_PebblingNumberCycle(benchmark::State& state) {
    const Graph g = generate("cycle:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        Solver solver(g);
        benchmark::DoNotOptimize(solver.pebbling_number().value);
    }
}
BENCHMARK(BM_PebblingNumberCycle)->DenseRange(3, 6);

void BM_PebblingNumberCorona(benchmark::State& state) {
    const Graph g = generate("corona:cycle:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        Solver solver(g);
        benchmark::DoNotOptimize(solver.pebbling_number().value);
    }
}
BENCHMARK(BM_PebblingNumberCorona)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_SolvabilityQuery(benchmark::State& state) {
    const Graph g = generate("doublestar:4");
    Solver solver(g);
    Distribution d(6);
    d[4] = 7;
    d[2] = 1;
    d[5] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(solver.is_k_solvable(d, 2, 1));
}
BENCHMARK(BM_SolvabilityQuery);

void BM_SolvabilityQueryColdCache(benchmark::State& state) {
    const Graph g = generate("path:6");
    Distribution d(6);
    d[0] = 31;
    for (auto _ : state) {
        Solver solver(g);
        benchmark::DoNotOptimize(solver.is_k_solvable(d, 5, 1));
    }
}
BENCHMARK(BM_SolvabilityQueryColdCache);

void BM_MinDominatingSet(benchmark::State& state) {
    const Graph g = generate("corona:cycle:" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(min_dominating_set(g).size);
}
BENCHMARK(BM_MinDominatingSet)->DenseRange(3, 5);

void BM_EfficientDominatingSet(benchmark::State& state) {
    const Graph g = generate("corona:cycle:" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_efficient_dominating_set(g).has_value());
}
BENCHMARK(BM_EfficientDominatingSet)->DenseRange(3, 5);

void BM_BoundLadderGrid(benchmark::State& state) {
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (std::int64_t n = 2; n <= 40; ++n)
            for (std::int64_t d = 1; d <= n - 1; ++d)
                acc += best_upper_bound(n, d, 1 + n / 4, 1 + n / 4).value;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BoundLadderGrid);

void BM_ComparisonPredicates(benchmark::State& state) {
    for (auto _ : state) {
        int holds = 0;
        for (std::int64_t n = 2; n <= 40; ++n)
            for (std::int64_t d = 2; d <= n - 1; ++d)
                holds += comparison_predicates(n, d, 1 + n / 4, 1 + n / 4).eq3.holds;
        benchmark::DoNotOptimize(holds);
    }
}
BENCHMARK(BM_ComparisonPredicates);

} // namespace

BENCHMARK_MAIN();
