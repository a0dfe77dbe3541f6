#include <benchmark/benchmark.h>

#include "kz/graph.hpp"
#include "kz/monomial_ideal.hpp"

using namespace kz;

static void BM_IdealPower(benchmark::State& state) {
  MonomialIdeal ideal = whisker_edge_ideal(SimpleGraph::cycle(4));
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_power(ideal, k));
}
BENCHMARK(BM_IdealPower)->DenseRange(1, 4);

static void BM_Minimalize(benchmark::State& state) {
  MonomialIdeal ideal = ideal_power(whisker_edge_ideal(SimpleGraph::cycle(4)), 3);
  std::vector<Monomial> gens = ideal.generators();
  for (const auto& g : ideal.generators())
    for (const auto& h : ideal.generators()) gens.push_back(lcm(g, h));
  for (auto _ : state) benchmark::DoNotOptimize(minimalize(gens));
}
BENCHMARK(BM_Minimalize);

static void BM_LcmLattice(benchmark::State& state) {
  MonomialIdeal ideal = ideal_power(whisker_edge_ideal(SimpleGraph::cycle(4)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(lcm_lattice(ideal));
}
BENCHMARK(BM_LcmLattice);

BENCHMARK_MAIN();
