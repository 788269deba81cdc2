#include <benchmark/benchmark.h>

#include "toric/hilbert.hpp"
#include "toric/lattice.hpp"
#include "toric/resolve3d.hpp"

using namespace toric;

namespace {

Cone big_triangle() { return make_cone({{-3, 3, 1}, {3, 1, 1}, {0, -3, 1}}); }

void BM_DualHilbertBasis(benchmark::State& state) {
  auto dual = dual_cone(big_triangle());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(dual));
}
BENCHMARK(BM_DualHilbertBasis)->Unit(benchmark::kMillisecond);

void BM_HilbertBasisSurface(benchmark::State& state) {
  Cone c = make_cone({{1, 0}, {state.range(0), state.range(0) + 1}});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c));
}
BENCHMARK(BM_HilbertBasisSurface)->RangeMultiplier(4)->Range(4, 256);

void BM_Resolve(benchmark::State& state) {
  Cone c = big_triangle();
  for (auto _ : state) benchmark::DoNotOptimize(resolve(c));
}
BENCHMARK(BM_Resolve)->Unit(benchmark::kMillisecond);

void BM_Completions(benchmark::State& state) {
  auto pc = blowup_curve_phase(crepant_fixed_point_phase(PolygonComplex(polygon_form(big_triangle()).polygon)));
  for (auto _ : state) benchmark::DoNotOptimize(completions(pc));
}
BENCHMARK(BM_Completions)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>((7 * i + 13 * j + i * j * j) % 23) - 11;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(3, 9, 3);

}  // namespace

BENCHMARK_MAIN();
