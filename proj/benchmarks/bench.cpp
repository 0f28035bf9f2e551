#include "resmirror/series.hpp"
#include "resmirror/vsc.hpp"

#include <benchmark/benchmark.h>

using namespace resmirror;

static void BM_two_point_quintic(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(two_point_cpn(5, 5, d, 0, 2));
}
BENCHMARK(BM_two_point_quintic)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_vsc_recursive(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vsc_recursive(5, 5, d, 1));
}
BENCHMARK(BM_vsc_recursive)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_vsc_residue(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vsc_residue(5, 5, d, 1));
}
BENCHMARK(BM_vsc_residue)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_mirror_map_kf0(benchmark::State& state) {
  const GeometrySpec g = make_geometry("kf0");
  for (auto _ : state) {
    MirrorMap m = mirror_map(g, static_cast<int>(state.range(0)));
    invert_mirror_map(m);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_mirror_map_kf0)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
