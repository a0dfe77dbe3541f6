#include <stdexcept>

#include <algorithm>
#include <set>

#include "doctest.h"
#include "kz/graph.hpp"
#include "kz/text_io.hpp"

using namespace kz;

namespace {

// subset-enumeration oracle for maximal independent sets
std::vector<std::vector<int>> mis_oracle(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) s.push_back(v);
    if (is_maximal_independent_set(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const SimpleGraph kFigure1(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});

}  // namespace

TEST_CASE("whisker construction") {
  WhiskerGraph w = whisker(SimpleGraph::path(2));
  CHECK(w.graph.vertex_count() == 4);
  CHECK(w.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});

  WhiskerGraph fig = whisker(kFigure1);
  CHECK(fig.graph.vertex_count() == 8);
  CHECK(fig.graph.edge_count() == 8);

  WhiskerGraph single = whisker(SimpleGraph::edgeless(1));
  CHECK(single.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("whisker graph invariants") {
  for (const auto& g : {SimpleGraph::path(4), SimpleGraph::cycle(5), SimpleGraph::complete(4)}) {
    int n = g.vertex_count();
    WhiskerGraph w = whisker(g);
    CHECK(w.graph.vertex_count() == 2 * n);
    CHECK(w.graph.edge_count() == g.edge_count() + n);
    for (int i = 0; i < n; ++i) CHECK(w.graph.degree(n + i) == 1);
  }
}

TEST_CASE("edge ideals") {
  MonomialIdeal k3 = edge_ideal(SimpleGraph::complete(3), VariableSpace::xn(3));
  CHECK(k3 == parse_ideal("vars: x1 x2 x3\nx1*x2\nx1*x3\nx2*x3\n"));

  MonomialIdeal wp2 = whisker_edge_ideal(SimpleGraph::path(2));
  CHECK(wp2 == parse_ideal("vars: x1 x2 y1 y2\nx1*x2\nx1*y1\nx2*y2\n"));

  CHECK(edge_ideal(SimpleGraph::edgeless(3), VariableSpace::xn(3)).is_zero());
}

TEST_CASE("connectivity and bipartiteness") {
  GraphPredicates k3 = graph_predicates(SimpleGraph::complete(3));
  CHECK(k3.connected);
  CHECK(!k3.bipartite);
  GraphPredicates c4 = graph_predicates(SimpleGraph::cycle(4));
  CHECK(c4.connected);
  CHECK(c4.bipartite);
  GraphPredicates two_k2 = graph_predicates(SimpleGraph(4, {{0, 1}, {2, 3}}));
  CHECK(!two_k2.connected);
  CHECK(two_k2.bipartite);
  CHECK(is_connected(SimpleGraph::edgeless(1)));
  CHECK(component_count(SimpleGraph(4, {{0, 1}, {2, 3}})) == 2);
}

TEST_CASE("maximal independent sets") {
  CHECK(maximal_independent_sets(SimpleGraph::complete(3)) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(maximal_independent_sets(SimpleGraph::path(3)) ==
        std::vector<std::vector<int>>{{0, 2}, {1}});
  SimpleGraph p4 = SimpleGraph::path(4);
  CHECK(maximal_independent_sets(p4) == mis_oracle(p4));
  CHECK(maximal_independent_sets(p4) ==
        std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("every maximal independent set dominates") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& tree : enumerate_trees(n))
      for (const auto& s : maximal_independent_sets(tree)) {
        uint32_t covered = 0;
        for (int v : s) covered |= (uint32_t(1) << v) | tree.neighbors(v);
        CHECK(covered == (uint32_t(1) << n) - 1);
      }
  }
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(SimpleGraph::complete(3)) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(maximal_cliques(SimpleGraph::path(3)) == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(maximal_cliques(kFigure1) == std::vector<std::vector<int>>{{0, 1}, {1, 2, 3}});
}

TEST_CASE("gamma graph") {
  SimpleGraph p4 = SimpleGraph::path(4);
  SimpleGraph friendly = gamma_graph(p4, {0, 2});
  CHECK(friendly.edge_count() == 1);
  CHECK(is_connected(friendly));

  SimpleGraph lonely = gamma_graph(p4, {0, 3});
  CHECK(lonely.edge_count() == 0);
  CHECK(!is_connected(lonely));

  SimpleGraph point = gamma_graph(SimpleGraph::complete(3), {0});
  CHECK(point.vertex_count() == 1);
  CHECK(is_connected(point));

  CHECK_THROWS_AS(gamma_graph(p4, {0, 1}), std::invalid_argument);
}

TEST_CASE("friendly independent sets") {
  CHECK(friendly_independent_set(SimpleGraph::path(4)) == std::vector<int>{0, 2});
  CHECK(friendly_independent_set(SimpleGraph::complete(3)) == std::vector<int>{0});
  CHECK(friendly_independent_set(kFigure1) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(friendly_independent_set(SimpleGraph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("friendly sets verify on all connected graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const SimpleGraph& g) {
      std::vector<int> s = friendly_independent_set(g);
      CHECK(is_maximal_independent_set(g, s));
      CHECK(is_connected(gamma_graph(g, s)));
      return true;
    });
  }
}

TEST_CASE("leaf-ordered spanning tree on a forced example") {
  LeafOrderedTree t = spanning_tree_leaf_order(SimpleGraph::path(3), {0, 2});
  CHECK(t.members == std::vector<int>{0, 2});
  CHECK(t.edges == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(t.witnesses == std::vector<int>{1});
}

TEST_CASE("leaf order labels a two-center tree like the worked example") {
  // subdividing every edge of the target tree makes the original vertices an
  // independent set whose gamma graph is exactly that tree
  std::vector<std::pair<int, int>> shape = {{1, 0}, {1, 2}, {1, 3}, {3, 4}, {3, 5}};
  std::vector<std::pair<int, int>> edges;
  int mid = 6;
  for (auto [a, b] : shape) {
    edges.emplace_back(a, mid);
    edges.emplace_back(mid, b);
    ++mid;
  }
  SimpleGraph g(11, edges);
  std::vector<int> s = {0, 1, 2, 3, 4, 5};
  LeafOrderedTree t = spanning_tree_leaf_order(g, s);
  REQUIRE(t.edges.size() == 5);
  CHECK(t.edges[0] == std::pair<int, int>{1, 2});
  for (size_t j = 0; j < t.edges.size(); ++j) {
    auto [attach, fresh] = t.edges[j];
    CHECK(fresh == static_cast<int>(j) + 2);
    CHECK(attach <= static_cast<int>(j) + 1);
    // witness is adjacent to both endpoints and lies outside S
    int a = t.members[static_cast<size_t>(attach - 1)];
    int b = t.members[static_cast<size_t>(fresh - 1)];
    int w = t.witnesses[j];
    CHECK(g.has_edge(a, w));
    CHECK(g.has_edge(w, b));
    CHECK(std::find(s.begin(), s.end(), w) == s.end());
  }
  // the deterministic rule reproduces the drawn labeling: 1-2, 2-3, 2-4, 4-5, 4-6
  CHECK(t.members == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(t.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
}

TEST_CASE("singleton set gives an edgeless tree") {
  LeafOrderedTree t = spanning_tree_leaf_order(SimpleGraph::complete(3), {0});
  CHECK(t.members == std::vector<int>{0});
  CHECK(t.edges.empty());
}

TEST_CASE("tree enumeration via Pruefer sequences") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(2).size() == 1);
  CHECK(enumerate_trees(3).size() == 3);
  CHECK(enumerate_trees(4).size() == 16);
  auto trees = enumerate_trees(5);
  CHECK(trees.size() == 125);
  std::set<std::vector<std::pair<int, int>>> seen;
  for (const auto& t : trees) {
    CHECK(t.edge_count() == 4);
    CHECK(is_connected(t));
    seen.insert(t.edges());
  }
  CHECK(seen.size() == 125);
  CHECK_THROWS_AS(enumerate_trees(9), std::invalid_argument);
}

TEST_CASE("families stream the right counts") {
  int connected3 = 0, connected4 = 0, forests3 = 0;
  for_each_connected_graph(3, [&](const SimpleGraph&) { ++connected3; return true; });
  for_each_connected_graph(4, [&](const SimpleGraph&) { ++connected4; return true; });
  for_each_forest(3, [&](const SimpleGraph&) { ++forests3; return true; });
  CHECK(connected3 == 4);
  CHECK(connected4 == 38);
  CHECK(forests3 == 7);
}
