#include <stdexcept>

#include "doctest.h"
#include "kz/text_io.hpp"

using namespace kz;

TEST_CASE("monomial tokens") {
  VariableSpace space = VariableSpace::whisker(2);
  CHECK(format_monomial(parse_monomial("x1^2*x2", space), space) == "x1^2*x2");
  CHECK(format_monomial(Monomial::unit(4), space) == "1");
  CHECK(parse_monomial("1", space).is_unit());
  CHECK(parse_monomial("x1*x1", space) == parse_monomial("x1^2", space));
  CHECK_THROWS_AS(parse_monomial("z9", space), std::invalid_argument);
}

TEST_CASE("ideal files round trip") {
  std::string text = "vars: x1 x2 y1 y2\n# the whiskered edge\nx1*x2\nx1*y1\n\nx2*y2\n";
  MonomialIdeal ideal = parse_ideal(text);
  CHECK(ideal.generator_count() == 3);
  CHECK(parse_ideal(format_ideal(ideal)) == ideal);

  MonomialIdeal zero = parse_ideal("vars: x1 x2\n");
  CHECK(zero.is_zero());
  CHECK(parse_ideal(format_ideal(zero)) == zero);

  CHECK_THROWS_AS(parse_ideal("x1*x2\n"), std::invalid_argument);
}

TEST_CASE("graph files round trip") {
  std::string text = "# a path\n4\n1 2\n2 3\n3 4\n";
  SimpleGraph g = parse_graph(text);
  CHECK(g == SimpleGraph::path(4));
  CHECK(parse_graph(format_graph(g)) == g);
  CHECK(parse_graph("1\n").vertex_count() == 1);
  CHECK_THROWS(parse_graph("2\n1\n"));
}

TEST_CASE("koszul element lines") {
  MonomialIdeal ideal = parse_ideal("vars: x1 x2\nx1^2*x2\nx1*x2^2\n");
  CoefficientModule mod = CoefficientModule::ideal_module(ideal);
  KoszulElement z = parse_koszul_element("1 * x1*x2^2 * e[1]\n-1 * x1^2*x2 * e[2]\n", mod);
  CHECK(z.term_count() == 2);
  CHECK(z.is_cycle());
  CHECK(parse_koszul_element(format_koszul_element(z), mod) == z);

  // empty index set and empty element
  CoefficientModule free_mod = CoefficientModule::free_module(ideal.space());
  KoszulElement c = parse_koszul_element("3 * x1 * e[]\n", free_mod);
  CHECK(c.homological_degree() == 0);
  CHECK(format_koszul_element(KoszulElement::zero(free_mod)).empty());
  CHECK(parse_koszul_element("", free_mod).is_zero());
}

TEST_CASE("whisker basis letters serialize as shifted indices") {
  // f_i is the letter of y_i, printed as e[n+i]
  VariableSpace space = VariableSpace::whisker(2);
  CoefficientModule mod = CoefficientModule::free_module(space);
  KoszulElement z = KoszulElement::term(mod, parse_monomial("x1", space), uint64_t(1) << 2);
  CHECK(format_koszul_element(z) == "1 * x1 * e[3]\n");
}
