#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mixvol/mixed_volume.hpp"
#include "mixvol/newton_bkk.hpp"

namespace {

using namespace mixvol;

PointSet random_points(std::mt19937_64& rng, int dim, int count, long lo, long hi) {
  std::uniform_int_distribution<long> coord(lo, hi);
  std::vector<IntegerVector> pts;
  for (int i = 0; i < count; ++i) {
    IntegerVector p;
    for (int d = 0; d < dim; ++d) p.emplace_back(coord(rng));
    pts.push_back(p);
  }
  return PointSet(dim, pts);
}

std::vector<Polytope> random_bodies(int dim, int size, int count) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(dim * 100 + size));
  std::vector<Polytope> out;
  for (int i = 0; i < size; ++i) out.push_back(convex_hull(random_points(rng, dim, count, -3, 3)));
  return out;
}

void BM_ConvexHull(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  const PointSet pts = random_points(rng, dim, 40, -10, 10);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts).volume());
}
BENCHMARK(BM_ConvexHull)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MinkowskiSum(benchmark::State& state) {
  const auto bodies = random_bodies(static_cast<int>(state.range(0)), 2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(bodies[0], bodies[1]));
}
BENCHMARK(BM_MinkowskiSum)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MixedVolume(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto bodies = random_bodies(dim, dim, dim + 2);
  const EvalOptions options{state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(bodies, options));
}
BENCHMARK(BM_MixedVolume)
    ->ArgsProduct({{2, 3, 4}, {0, 1}})
    ->ArgNames({"dim", "parallel"})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_CheckAf(benchmark::State& state) {
  const auto bodies = random_bodies(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_af(bodies).holds);
}
BENCHMARK(BM_CheckAf)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_IsoperimetricRegularPolygon(benchmark::State& state) {
  const Polytope p = regular_polygon(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isoperimetric_check(p).holds);
}
BENCHMARK(BM_IsoperimetricRegularPolygon)->Arg(90)->Arg(360)->Unit(benchmark::kMillisecond);

void BM_Oracle2d(benchmark::State& state) {
  const std::vector<std::string> vars{"x", "y"};
  const LaurentPolynomial f = parse_laurent("x^3*y^-1 + y^2 + x^-2 + x*y + 1", vars);
  const LaurentPolynomial g = parse_laurent("x^-1*y^3 + x^2 + y^-2 + x*y^-1", vars);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count_2d(f, g, seed++).value);
}
BENCHMARK(BM_Oracle2d)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
