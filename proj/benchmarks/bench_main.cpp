#include <benchmark/benchmark.h>

#include "choreme/disk_fit.hpp"
#include "choreme/sampling.hpp"
#include "synthetic.hpp"

using namespace choreme;

namespace {

std::vector<WeightedPoint> random_points(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<WeightedPoint> pts;
    for (std::size_t k = 0; k < n; ++k) pts.push_back({{rng.uniform(), rng.uniform()}, k % 2 == 0 ? 0.5 : -0.5});
    return pts;
}

void BM_DiskFit(benchmark::State& state) {
    const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(max_weight_smallest_disk(pts, {1}));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiskFit)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_PairSweep(benchmark::State& state) {
    const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(pair_sweep(0, 1, pts));
}
BENCHMARK(BM_PairSweep)->Arg(1000)->Arg(10000);

void BM_DiskPolygonArea(benchmark::State& state) {
    const PolygonWithHoles p = choreme::testing::random_star(3, {0, 0}, 1.0, static_cast<int>(state.range(0)), true);
    const Disk d{{0.1, -0.2}, 0.7};
    for (auto _ : state) benchmark::DoNotOptimize(disk_polygon_area(d, p));
}
BENCHMARK(BM_DiskPolygonArea)->Arg(16)->Arg(256);

void BM_SampleMap(benchmark::State& state) {
    static const auto corpus = choreme::testing::synth_corpus();
    const auto st = static_cast<Strategy>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_map(corpus[0].map, {st, Scope::local, 500, 25, 1}, 1));
    state.SetLabel(std::string(to_string(st)));
}
BENCHMARK(BM_SampleMap)
    ->Arg(static_cast<int>(Strategy::random))
    ->Arg(static_cast<int>(Strategy::voronoi))
    ->Arg(static_cast<int>(Strategy::grid_square))
    ->Arg(static_cast<int>(Strategy::grid_hex))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
