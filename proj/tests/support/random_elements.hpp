#pragma once

#include "kz/koszul_element.hpp"
#include "kz/rng.hpp"

namespace kz_test {

/// random multi-homogeneous element over a free module: fixes a target
/// multidegree and samples admissible terms
inline kz::KoszulElement random_homogeneous(kz::Rng& rng, int nvars, int homdeg) {
  kz::CoefficientModule mod = kz::CoefficientModule::free_module(kz::VariableSpace::xn(nvars));
  std::vector<int> degree(static_cast<size_t>(nvars));
  for (auto& v : degree) v = static_cast<int>(rng.between(0, 2));
  for (int t = 0; t < homdeg; ++t)
    degree[static_cast<size_t>(rng.below(static_cast<uint64_t>(nvars)))] += 1;
  kz::KoszulElement z(mod);
  for (int attempt = 0; attempt < 8; ++attempt) {
    uint64_t jmask = 0;
    int picked = 0;
    std::vector<int> e = degree;
    for (int v = 0; v < nvars && picked < homdeg; ++v) {
      if (e[static_cast<size_t>(v)] > 0 && rng.coin()) {
        jmask |= uint64_t(1) << v;
        --e[static_cast<size_t>(v)];
        ++picked;
      }
    }
    if (picked < homdeg) continue;
    z.add_term(kz::Monomial(e), jmask, rng.between(-3, 3));
  }
  return z;
}

}  // namespace kz_test
