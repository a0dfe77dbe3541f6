#include <benchmark/benchmark.h>

#include "kz/graph.hpp"

using namespace kz;

static void BM_MaximalIndependentSets(benchmark::State& state) {
  SimpleGraph g = SimpleGraph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_independent_sets(g));
}
BENCHMARK(BM_MaximalIndependentSets)->Arg(6)->Arg(10)->Arg(14);

static void BM_FriendlySet(benchmark::State& state) {
  SimpleGraph g = SimpleGraph::path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(friendly_independent_set(g));
}
BENCHMARK(BM_FriendlySet)->Arg(5)->Arg(7);

static void BM_EnumerateTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateTrees)->Arg(5)->Arg(6);
