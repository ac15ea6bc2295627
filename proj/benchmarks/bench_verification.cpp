#include <benchmark/benchmark.h>

#include "braidhom/verification.hpp"

using namespace braidhom;

namespace {

void BM_LesExactness(benchmark::State& state) {
  const Graph g = theta_graph(4);
  for (auto _ : state) {
    clear_homology_cache();
    benchmark::DoNotOptimize(check_les_exactness(g, 0, kNone, 2, static_cast<int>(state.range(0))).passed());
  }
}
BENCHMARK(BM_LesExactness)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MainTheorem(benchmark::State& state) {
  const Graph g = complete_graph(4);
  for (auto _ : state) {
    clear_homology_cache();
    benchmark::DoNotOptimize(check_main_theorem(g, static_cast<int>(state.range(0))).passed());
  }
}
BENCHMARK(BM_MainTheorem)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NonplanarDemo(benchmark::State& state) {
  for (auto _ : state) {
    clear_homology_cache();
    benchmark::DoNotOptimize(nonplanar_demo(2).passed());
  }
}
BENCHMARK(BM_NonplanarDemo)->Unit(benchmark::kMillisecond);

void BM_MSubmodule(benchmark::State& state) {
  const Graph g = wheel_graph(4);
  homology(g, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(m_submodule(g, 3).is_whole());
}
BENCHMARK(BM_MSubmodule)->Unit(benchmark::kMillisecond);

}  // namespace
