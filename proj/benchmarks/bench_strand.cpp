#include <benchmark/benchmark.h>

#include "kz/graph.hpp"
#include "kz/homology.hpp"

using namespace kz;

static void BM_DepthWhiskerPower(benchmark::State& state) {
  SimpleGraph g = SimpleGraph::cycle(4);
  MonomialIdeal power = ideal_power(whisker_edge_ideal(g), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(depth(power));
}
BENCHMARK(BM_DepthWhiskerPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_StrandDims(benchmark::State& state) {
  MonomialIdeal ideal = ideal_power(whisker_edge_ideal(SimpleGraph::cycle(4)), 2);
  CoefficientModule mod = CoefficientModule::quotient_module(ideal);
  Monomial deep = lcm_lattice(ideal).back();
  PrimeField field;
  for (auto _ : state) {
    Strand strand(mod, deep);
    benchmark::DoNotOptimize(strand.homology_dims(field));
  }
}
BENCHMARK(BM_StrandDims);
