#include <benchmark/benchmark.h>

#include "kz/whisker_certificate.hpp"

using namespace kz;

static void BM_CertificateBuildAndVerify(benchmark::State& state) {
  SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  int k = static_cast<int>(state.range(0));
  PrimeField field;
  for (auto _ : state) {
    WhiskerCertificate cert = certificate(g, k, field);
    benchmark::DoNotOptimize(verify_certificate(cert));
  }
}
BENCHMARK(BM_CertificateBuildAndVerify)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
