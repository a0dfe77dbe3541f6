#include <algorithm>

#include "doctest.h"
#include "kz/errors.hpp"
#include "kz/graph.hpp"
#include "kz/monomial_ideal.hpp"
#include "kz/rng.hpp"
#include "kz/text_io.hpp"

using namespace kz;

namespace {

MonomialIdeal ideal_of(const std::string& text) { return parse_ideal(text); }

Monomial mono(const VariableSpace& space, const std::string& token) {
  return parse_monomial(token, space);
}

}  // namespace

TEST_CASE("minimalize drops divisible generators") {
  auto i1 = ideal_of("vars: x1 x2\nx1*x2\nx1^2*x2\n");
  CHECK(i1.generator_count() == 1);
  CHECK(i1.generators()[0] == mono(i1.space(), "x1*x2"));

  auto i2 = ideal_of("vars: x1 x2\nx1^2*x2\nx1*x2^2\n");
  CHECK(i2.generator_count() == 2);

  auto i3 = ideal_of("vars: x1 x2\nx1\nx2\nx1*x2\n");
  CHECK(i3.generator_count() == 2);
  CHECK(i3.generators()[0] == mono(i3.space(), "x2"));  // lex order: (0,1) < (1,0)
  CHECK(i3.generators()[1] == mono(i3.space(), "x1"));
}

TEST_CASE("minimalize is idempotent on random generator sets") {
  Rng rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng.between(1, 4));
    std::vector<Monomial> gens;
    for (int g = static_cast<int>(rng.between(1, 6)); g > 0; --g) {
      std::vector<int> e(static_cast<size_t>(n));
      for (auto& v : e) v = static_cast<int>(rng.between(0, 3));
      gens.emplace_back(std::move(e));
    }
    std::vector<Monomial> once = minimalize(gens);
    CHECK(minimalize(once) == once);
  }
}

TEST_CASE("ideal_power basics") {
  auto principal = ideal_of("vars: x1 x2\nx1*x2\n");
  auto squared = ideal_power(principal, 2);
  CHECK(squared.generator_count() == 1);
  CHECK(squared.generators()[0] == mono(principal.space(), "x1^2*x2^2"));

  CHECK(ideal_power(principal, 1) == principal);
  CHECK(ideal_power(principal, 0).is_unit());
  CHECK_THROWS_AS(ideal_power(principal, -1), std::invalid_argument);
}

TEST_CASE("square of the whiskered edge ideal") {
  MonomialIdeal base = whisker_edge_ideal(SimpleGraph::path(2));
  MonomialIdeal squared = ideal_power(base, 2);

  // independent route: all pairwise products, pruned by divisibility
  std::vector<Monomial> products;
  for (const auto& a : base.generators())
    for (const auto& b : base.generators()) products.push_back(a * b);
  MonomialIdeal expected = MonomialIdeal::from_generators(base.space(), products);
  CHECK(squared == expected);

  const VariableSpace& s = base.space();
  std::vector<Monomial> frozen = {
      mono(s, "x1^2*x2^2"), mono(s, "x1^2*x2*y1"), mono(s, "x1*x2^2*y2"),
      mono(s, "x1^2*y1^2"), mono(s, "x2^2*y2^2"),  mono(s, "x1*x2*y1*y2")};
  std::sort(frozen.begin(), frozen.end());
  CHECK(squared.generators() == frozen);
}

TEST_CASE("colon by a monomial") {
  auto i = ideal_of("vars: x1 x2 y1\nx1*x2\nx1*y1\n");
  auto q = colon(i, mono(i.space(), "x1"));
  CHECK(q == ideal_of("vars: x1 x2 y1\nx2\ny1\n"));

  auto i2 = ideal_of("vars: x1 x2 y1\nx1*y1\nx1*x2\n");
  auto q2 = colon(i2, mono(i2.space(), "x2"));
  CHECK(q2 == ideal_of("vars: x1 x2 y1\nx1\n"));

  CHECK(colon(i, Monomial::unit(3)) == i);
}

TEST_CASE("colon soundness: m * g lies in I") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.between(1, 4));
    std::vector<Monomial> gens;
    for (int g = static_cast<int>(rng.between(1, 5)); g > 0; --g) {
      std::vector<int> e(static_cast<size_t>(n));
      for (auto& v : e) v = static_cast<int>(rng.between(0, 2));
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal = MonomialIdeal::from_generators(VariableSpace::xn(n), gens);
    std::vector<int> me(static_cast<size_t>(n));
    for (auto& v : me) v = static_cast<int>(rng.between(0, 2));
    Monomial m(me);
    MonomialIdeal quotient = colon(ideal, m);
    for (const auto& g : quotient.generators()) CHECK(ideal.contains(m * g));
  }
}

TEST_CASE("substitute a variable to zero") {
  auto i = ideal_of("vars: x1 x2 y1 y2\nx1*x2\nx1*y1\nx2*y2\n");
  CHECK(substitute_zero(i, 1) == ideal_of("vars: x1 x2 y1 y2\nx1*y1\n"));
  auto j = ideal_of("vars: x1 y1\nx1*y1\n");
  CHECK(substitute_zero(j, 0).is_zero());
}

TEST_CASE("substituting a whisker vertex matches the edge-filtered graph") {
  // drop vertex 4 from the graph with edges 12, 23, 34, 24
  SimpleGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  MonomialIdeal whiskered = whisker_edge_ideal(g);
  MonomialIdeal dropped = substitute_zero(whiskered, 3);

  SimpleGraph filtered(4, {{0, 1}, {1, 2}});
  WhiskerGraph wf = whisker(filtered);
  std::vector<std::pair<int, int>> edges = wf.graph.edges();
  // vertex 4 lost its whisker too
  std::erase(edges, std::make_pair(3, 7));
  MonomialIdeal expected = edge_ideal(SimpleGraph(8, edges), VariableSpace::whisker(4));
  CHECK(dropped == expected);
}

TEST_CASE("polarization of the two-generator example") {
  auto i = ideal_of("vars: x1 x2\nx1^2*x2\nx1*x2^2\n");
  auto [polarized, space] = polarize_ideal(i);
  CHECK(space.count() == 4);
  CHECK(space.labels() == std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x2_2"});
  std::vector<Monomial> expected = {mono(space, "x1_1*x1_2*x2_1"), mono(space, "x1_1*x2_1*x2_2")};
  std::sort(expected.begin(), expected.end());
  CHECK(polarized.generators() == expected);
  CHECK(polarized.is_squarefree());
}

TEST_CASE("polarizing a squarefree ideal is a renaming") {
  auto i = ideal_of("vars: x1 x2 x3\nx1*x2\nx2*x3\n");
  auto [polarized, space] = polarize_ideal(i);
  CHECK(polarized.is_squarefree());
  CHECK(space.count() == 3);
  CHECK(depolarize_ideal(polarized, i.space()) == i);
}

TEST_CASE("whiskered triangle is the polarization of the squares-added ideal") {
  SimpleGraph k3 = SimpleGraph::complete(3);
  MonomialIdeal jg = ideal_sum(edge_ideal(k3, VariableSpace::xn(3)),
                               ideal_of("vars: x1 x2 x3\nx1^2\nx2^2\nx3^2\n"));
  auto [polarized, space] = polarize_ideal(jg);

  // identify x_{i,1} with x_i and x_{i,2} with y_i
  MonomialIdeal whiskered = whisker_edge_ideal(k3);
  std::vector<Monomial> mapped;
  for (const auto& g : polarized.generators()) {
    std::vector<int> e(6, 0);
    for (int i = 0; i < 3; ++i) {
      e[static_cast<size_t>(i)] = g.exponent(space.split_slot(i, 1));
      e[static_cast<size_t>(3 + i)] = g.exponent(space.split_slot(i, 2));
    }
    mapped.emplace_back(std::move(e));
  }
  CHECK(MonomialIdeal::from_generators(VariableSpace::whisker(3), mapped) == whiskered);
}

TEST_CASE("polarization invariants on random ideals") {
  Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.between(1, 3));
    std::vector<Monomial> gens;
    for (int g = static_cast<int>(rng.between(1, 4)); g > 0; --g) {
      std::vector<int> e(static_cast<size_t>(n));
      for (auto& v : e) v = static_cast<int>(rng.between(0, 3));
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal = MonomialIdeal::from_generators(VariableSpace::xn(n), gens);
    auto [polarized, space] = polarize_ideal(ideal);
    CHECK(polarized.is_squarefree());
    CHECK(polarized.generator_count() == ideal.generator_count());
    CHECK(depolarize_ideal(polarized, ideal.space()) == ideal);
    // total degrees preserved generator by generator
    std::vector<int> before, after;
    for (const auto& g : ideal.generators()) before.push_back(g.total_degree());
    for (const auto& g : polarized.generators()) after.push_back(g.total_degree());
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    CHECK(before == after);
  }
}

TEST_CASE("one-step polarization") {
  auto i = ideal_of("vars: x1 x2\nx1^2*x2\nx1*x2^2\n");
  auto [stepped, space] = one_step_polarize_ideal(i, 0);
  CHECK(space.labels() == std::vector<std::string>{"x1", "x2", "y"});
  CHECK(stepped == parse_ideal("vars: x1 x2 y\nx1*y*x2\nx1*x2^2\n"));

  auto sf = ideal_of("vars: x1 x2\nx1*x2\n");
  auto [sf_step, sf_space] = one_step_polarize_ideal(sf, 0);
  CHECK(sf_step.generators()[0].exponents() == std::vector<int>{1, 1, 0});

  auto cube = ideal_of("vars: x1\nx1^3\n");
  auto [cube_step, cube_space] = one_step_polarize_ideal(cube, 0);
  CHECK(cube_step == parse_ideal("vars: x1 y\nx1^2*y\n"));
}

TEST_CASE("iterated one-step polarization reaches the full polarization") {
  Rng rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rng.between(1, 3));
    std::vector<Monomial> gens;
    for (int g = static_cast<int>(rng.between(1, 4)); g > 0; --g) {
      std::vector<int> e(static_cast<size_t>(n));
      for (auto& v : e) v = static_cast<int>(rng.between(0, 3));
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal = MonomialIdeal::from_generators(VariableSpace::xn(n), gens);

    // iterate: each fresh variable is the next split copy of its source
    MonomialIdeal current = ideal;
    std::vector<std::pair<int, int>> identity;  // composed var -> (source, slot)
    for (int v = 0; v < n; ++v) identity.emplace_back(v, 1);
    for (int v = 0; v < n; ++v) {
      int slot = 2;
      for (;;) {
        bool square = false;
        for (const auto& g : current.generators())
          if (g.exponent(v) >= 2) square = true;
        if (!square) break;
        auto [next, next_space] = one_step_polarize_ideal(current, v);
        current = next;
        identity.emplace_back(v, slot++);
      }
    }
    auto [expected, target] = polarize_ideal(ideal);
    std::vector<Monomial> renamed;
    for (const auto& g : current.generators()) {
      std::vector<int> e(static_cast<size_t>(target.count()), 0);
      for (int v = 0; v < current.nvars(); ++v) {
        if (g.exponent(v) == 0) continue;
        auto [src, slot] = identity[static_cast<size_t>(v)];
        e[static_cast<size_t>(target.split_slot(src, slot))] += g.exponent(v);
      }
      renamed.emplace_back(std::move(e));
    }
    CHECK(MonomialIdeal::from_generators(target, renamed) == expected);
  }
}

TEST_CASE("lcm lattice closure") {
  auto two_vars = ideal_of("vars: x1 x2\nx1\nx2\n");
  CHECK(lcm_lattice(two_vars).size() == 4);

  auto principal = ideal_of("vars: x1 x2\nx1*x2\n");
  CHECK(lcm_lattice(principal).size() == 2);

  auto example = ideal_of("vars: x1 x2\nx1^2*x2\nx1*x2^2\n");
  std::vector<Monomial> lattice = lcm_lattice(example);
  // brute-force closure over all generator subsets
  std::vector<Monomial> expected = {Monomial::unit(2), mono(example.space(), "x1^2*x2"),
                                    mono(example.space(), "x1*x2^2"),
                                    mono(example.space(), "x1^2*x2^2")};
  std::sort(expected.begin(), expected.end());
  CHECK(lattice == expected);

  // join-closed
  for (const auto& a : lattice)
    for (const auto& b : lattice)
      CHECK(std::binary_search(lattice.begin(), lattice.end(), lcm(a, b)));
}

TEST_CASE("lcm lattice capacity error names the fallback") {
  MonomialIdeal big = whisker_edge_ideal(SimpleGraph::complete(3));
  CHECK_THROWS_AS(lcm_lattice(big, 5), capacity_error);
  try {
    lcm_lattice(big, 5);
  } catch (const capacity_error& e) {
    CHECK(std::string(e.what()).find("exponent box") != std::string::npos);
  }
}

TEST_CASE("exponent box contains the lattice and streams deepest first") {
  auto example = ideal_of("vars: x1 x2\nx1^2*x2\nx1*x2^2\n");
  std::vector<Monomial> box;
  for_each_exponent_box_candidate(example, [&](const Monomial& m) {
    box.push_back(m);
    return true;
  });
  CHECK(box.size() == 9);  // {0,1,2} x {0,1,2}
  CHECK(box.front().exponents() == std::vector<int>{2, 2});
  CHECK(box.back().is_unit());
  for (const auto& a : lcm_lattice(example)) {
    CHECK(std::find(box.begin(), box.end(), a) != box.end());
    CHECK(is_lcm_of_generators(example, a));
  }
  CHECK(!is_lcm_of_generators(example, mono(example.space(), "x1")));
}

TEST_CASE("mixed variable spaces are rejected") {
  CHECK_THROWS_AS(MonomialIdeal::from_generators(VariableSpace::xn(2), {Monomial({1, 0, 0})}),
                  space_mismatch_error);
}

TEST_CASE("zero and unit ideals") {
  MonomialIdeal zero = MonomialIdeal::zero(VariableSpace::xn(2));
  CHECK(zero.is_zero());
  CHECK(!zero.contains(Monomial({1, 0})));
  MonomialIdeal unit = MonomialIdeal::unit_ideal(VariableSpace::xn(2));
  CHECK(unit.is_unit());
  CHECK(unit.contains(Monomial::unit(2)));
}
