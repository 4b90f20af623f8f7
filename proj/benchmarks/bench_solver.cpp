#include <benchmark/benchmark.h>

#include "mutviz/families.hpp"
#include "mutviz/realizability.hpp"
#include "mutviz/removal.hpp"
#include "mutviz/solver.hpp"

namespace {

using namespace mutviz;

void BM_AllFourHk(benchmark::State& state) {
    const Graph g = h_k(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(all_four(g));
}
BENCHMARK(BM_AllFourHk)->Arg(3)->Arg(4)->Arg(5);

void BM_MutualCycle(benchmark::State& state) {
    const Graph g = cycle(static_cast<int>(state.range(0))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(max_visibility_set(g, VisibilityKind::mutual));
}
BENCHMARK(BM_MutualCycle)->Arg(10)->Arg(20)->Arg(30);

void BM_PairVisibility(benchmark::State& state) {
    const Graph g = cycle_with_leaves(20, {3, 7, 11, 15}).graph;
    const VisibilityIndex idx(g);
    const VertexSet x = VertexSet::of({2, 6, 10, 14, 20, 21});
    int u = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(idx.visible(x, u, (u + 9) % g.order()));
        u = (u + 1) % g.order();
    }
}
BENCHMARK(BM_PairVisibility);

void BM_EdgeScan(benchmark::State& state) {
    const Graph g = h_k(4).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(edge_scan(g, VisibilityKind::mutual));
}
BENCHMARK(BM_EdgeScan);

void BM_Census(benchmark::State& state) {
    for (auto _ : state) {
        int count = 0;
        enumerate_connected_graphs(static_cast<int>(state.range(0)),
                                   [&](const Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Census)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
