#include <stdexcept>

#include "doctest.h"
#include "kz/koszul_element.hpp"
#include "kz/rng.hpp"
#include "kz/text_io.hpp"

using namespace kz;

namespace {

CoefficientModule free2() { return CoefficientModule::free_module(VariableSpace::xn(2)); }

/// random multi-homogeneous element over a free module: fixes a target
/// multidegree and samples admissible terms
KoszulElement random_homogeneous(Rng& rng, int nvars, int homdeg) {
  CoefficientModule mod = CoefficientModule::free_module(VariableSpace::xn(nvars));
  std::vector<int> degree(static_cast<size_t>(nvars));
  for (auto& v : degree) v = static_cast<int>(rng.between(0, 2));
  for (int t = 0; t < homdeg; ++t) degree[static_cast<size_t>(rng.below(nvars))] += 1;
  KoszulElement z(mod);
  for (int attempt = 0; attempt < 8; ++attempt) {
    // pick an index set inside the support of the degree, then the monomial
    // is forced
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
    z.add_term(Monomial(e), jmask, rng.between(-3, 3));
  }
  return z;
}

}  // namespace

TEST_CASE("boundary of a two-letter wedge") {
  KoszulElement z = KoszulElement::term(free2(), Monomial::unit(2), 0b11);
  KoszulElement expected(free2());
  expected.add_term(Monomial({1, 0}), 0b10, 1);   // +x1 e2
  expected.add_term(Monomial({0, 1}), 0b01, -1);  // -x2 e1
  CHECK(z.boundary() == expected);
}

TEST_CASE("the two-generator cycle really is a cycle") {
  MonomialIdeal ideal = parse_ideal("vars: x1 x2\nx1^2*x2\nx1*x2^2\n");
  CoefficientModule mod = CoefficientModule::ideal_module(ideal);
  KoszulElement z(mod);
  z.add_term(parse_monomial("x1*x2^2", ideal.space()), 0b01, 1);
  z.add_term(parse_monomial("x1^2*x2", ideal.space()), 0b10, -1);
  CHECK(z.is_cycle());
  CHECK(z.homological_degree() == 1);
  CHECK(*z.multidegree() == Monomial({2, 2}));
}

TEST_CASE("boundary of a zero-letter term vanishes") {
  KoszulElement z = KoszulElement::term(free2(), Monomial({3, 1}), 0);
  CHECK(z.boundary().is_zero());
}

TEST_CASE("wedge products") {
  KoszulElement e1 = KoszulElement::term(free2(), Monomial::unit(2), 0b01);
  KoszulElement e2 = KoszulElement::term(free2(), Monomial::unit(2), 0b10);
  KoszulElement x1e1 = KoszulElement::term(free2(), Monomial({1, 0}), 0b01);
  KoszulElement x2e2 = KoszulElement::term(free2(), Monomial({0, 1}), 0b10);
  KoszulElement x1e2 = KoszulElement::term(free2(), Monomial({1, 0}), 0b10);
  KoszulElement x2e1 = KoszulElement::term(free2(), Monomial({0, 1}), 0b01);

  CHECK(wedge(e1, e1, free2()).is_zero());
  CHECK(wedge(x1e1, x2e2, free2()) ==
        KoszulElement::term(free2(), Monomial({1, 1}), 0b11, 1));
  CHECK(wedge(x1e2, x2e1, free2()) ==
        KoszulElement::term(free2(), Monomial({1, 1}), 0b11, -1));
}

TEST_CASE("term multidegrees") {
  CHECK(KoszulElement::term_multidegree(Monomial({1, 2}), 0b01) == Monomial({2, 2}));
  CHECK(KoszulElement::term_multidegree(Monomial::unit(2), 0) == Monomial({0, 0}));
  // polarized-space term: x11 x21 x22 with the letter e_{12}
  CHECK(KoszulElement::term_multidegree(Monomial({1, 0, 1, 1}), 0b0010) ==
        Monomial({1, 1, 1, 1}));
}

TEST_CASE("boundary squares to zero and preserves multidegree") {
  Rng rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng.between(2, 5));
    int i = static_cast<int>(rng.between(1, n));
    KoszulElement z = random_homogeneous(rng, n, i);
    if (z.is_zero()) continue;
    KoszulElement dz = z.boundary();
    CHECK(dz.boundary().is_zero());
    if (!dz.is_zero()) CHECK(*dz.multidegree() == *z.multidegree());
  }
}

TEST_CASE("Leibniz rule for the wedge") {
  Rng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.between(2, 4));
    int p = static_cast<int>(rng.between(1, 2));
    int q = static_cast<int>(rng.between(1, 2));
    KoszulElement a = random_homogeneous(rng, n, p);
    KoszulElement b = random_homogeneous(rng, n, q);
    CoefficientModule mod = CoefficientModule::free_module(VariableSpace::xn(n));
    KoszulElement lhs = wedge(a, b, mod).boundary();
    KoszulElement rhs = wedge(a.boundary(), b, mod) +
                        wedge(a, b.boundary(), mod).scaled(p % 2 == 0 ? 1 : -1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("coefficient module rules") {
  MonomialIdeal ideal = parse_ideal("vars: x1 x2\nx1*x2\n");
  // quotient coefficients reduce silently
  KoszulElement q(CoefficientModule::quotient_module(ideal));
  q.add_term(parse_monomial("x1*x2", ideal.space()), 0, 1);
  CHECK(q.is_zero());
  q.add_term(parse_monomial("x1", ideal.space()), 0, 1);
  CHECK(q.term_count() == 1);
  // ideal coefficients must belong
  KoszulElement id(CoefficientModule::ideal_module(ideal));
  CHECK_THROWS_AS(id.add_term(parse_monomial("x1", ideal.space()), 0, 1), std::invalid_argument);
  id.add_term(parse_monomial("x1*x2", ideal.space()), 0, 1);
  CHECK(id.term_count() == 1);
  // casting enforces the target rule
  CHECK_THROWS_AS(q.cast_to(CoefficientModule::ideal_module(ideal)), std::invalid_argument);
}

TEST_CASE("mixed homological degree is rejected") {
  KoszulElement z(free2());
  z.add_term(Monomial({1, 0}), 0b01, 1);
  z.add_term(Monomial({1, 0}), 0b11, 1);
  CHECK_THROWS_AS(z.homological_degree(), std::logic_error);
}

TEST_CASE("inhomogeneous multidegree is rejected") {
  KoszulElement z(free2());
  z.add_term(Monomial({1, 0}), 0, 1);
  z.add_term(Monomial({0, 1}), 0, 1);
  CHECK_THROWS_AS(z.multidegree(), std::logic_error);
}
