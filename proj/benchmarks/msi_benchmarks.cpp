#include <benchmark/benchmark.h>

#include "msi/constructions.hpp"
#include "msi/invariants.hpp"

using namespace msi;

static void BM_LatticeGenerators(benchmark::State& state) {
  const auto p = epigraph_region(build_kinked_f(4));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_generators(p, state.range(0)));
}
BENCHMARK(BM_LatticeGenerators)->Arg(8)->Arg(64)->Arg(512);

static void BM_PowerOfIdeal(benchmark::State& state) {
  const auto a = minimalize({{5, 0}, {2, 1}, {0, 3}}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(power(a, state.range(0)));
}
BENCHMARK(BM_PowerOfIdeal)->Arg(4)->Arg(16)->Arg(64);

static void BM_KinkedSystemEval(benchmark::State& state) {
  set_eval_cache_enabled(false);
  const auto sys = kinked_intersection_system(4);
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sys.eval({n, n}));
  set_eval_cache_enabled(true);
}
BENCHMARK(BM_KinkedSystemEval)->Arg(6)->Arg(24)->Arg(120);

static void BM_KinkedOrd0(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kinked_ord0(make_rational(1), make_rational(9, 8), n));
}
BENCHMARK(BM_KinkedOrd0)->Arg(1)->Arg(4)->Arg(8);

static void BM_KinkScan(benchmark::State& state) {
  const auto sys = kinked_intersection_system(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ord0_kink_table(sys, make_rational(1), make_rational(1, 2), make_rational(2)));
}
BENCHMARK(BM_KinkScan)->Arg(1)->Arg(4);

static void BM_RayHull(benchmark::State& state) {
  const std::int64_t r = state.range(0);
  std::vector<IndexVector> pts;
  for (const auto& v : IndexWindow::cube(3, -r, r).points())
    if (v[2] >= std::abs(v[0]) + std::abs(v[1])) pts.push_back(v);
  for (auto _ : state) benchmark::DoNotOptimize(ray_hull(pts, 3));
}
BENCHMARK(BM_RayHull)->Arg(2)->Arg(4);

static void BM_NefScan(benchmark::State& state) {
  const auto sys = ceiling_system(abs_value_cone());
  for (auto _ : state) benchmark::DoNotOptimize(nef_points(sys, state.range(0)));
}
BENCHMARK(BM_NefScan)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
