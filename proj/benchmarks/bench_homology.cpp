#include <benchmark/benchmark.h>

#include <random>

#include "braidhom/homology.hpp"

using namespace braidhom;

namespace {

void BM_ThetaHomology(benchmark::State& state) {
  const Graph g = theta_graph(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_homology(g, 2, k).rank());
}
BENCHMARK(BM_ThetaHomology)->Args({4, 3})->Args({4, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_CompleteBipartite(benchmark::State& state) {
  const Graph g = complete_bipartite_graph(3, 3);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_homology(g, 1, k).rank());
}
BENCHMARK(BM_CompleteBipartite)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Variant(benchmark::State& state) {
  const Graph g = wheel_graph(4);
  const auto v = state.range(0) ? ComplexVariant::reduced : ComplexVariant::unreduced;
  for (auto _ : state) benchmark::DoNotOptimize(compute_homology(g, 2, 3, v).rank());
  state.SetLabel(state.range(0) ? "reduced" : "unreduced");
}
BENCHMARK(BM_Variant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiniteField(benchmark::State& state) {
  const Graph g = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(compute_homology(g, 2, 4, ComplexVariant::automatic, 2).rank());
}
BENCHMARK(BM_FiniteField)->Unit(benchmark::kMillisecond);

void BM_MemoHit(benchmark::State& state) {
  const Graph g = theta_graph(4);
  homology(g, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(homology(g, 2, 3).get());
}
BENCHMARK(BM_MemoHit);

void BM_Smith(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = entry(rng);
  const unsigned transforms = state.range(1) ? kAllTransforms : kNoTransforms;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, transforms).rank);
}
BENCHMARK(BM_Smith)->Args({20, 0})->Args({20, 1})->Args({40, 0})->Args({40, 1})->Unit(benchmark::kMillisecond);

void BM_BoundaryMatrix(benchmark::State& state) {
  const Graph g = complete_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_matrix(g, 2, 4).nonzeros());
}
BENCHMARK(BM_BoundaryMatrix)->Unit(benchmark::kMillisecond);

}  // namespace
