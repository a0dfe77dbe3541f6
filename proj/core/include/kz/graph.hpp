#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kz/monomial_ideal.hpp"
#include "kz/variable_space.hpp"

namespace kz {

/// Finite simple graph on vertices 0..n-1 (text formats are 1-based).
/// Capped at 32 vertices so neighborhoods fit in a word.
class SimpleGraph {
public:
  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  static SimpleGraph path(int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph complete(int n);
  static SimpleGraph edgeless(int n);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int i, int j) const;
  uint32_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // i < j, sorted
  std::vector<uint32_t> adj_;
};

/// G together with a pendant edge {i, i'} at every vertex; i' is vertex n+i.
struct WhiskerGraph {
  SimpleGraph base;
  SimpleGraph graph;  // on 2n vertices
};

WhiskerGraph whisker(const SimpleGraph& g);

/// edge ideal: x_i x_j over the edges; `space` must have at least n variables
MonomialIdeal edge_ideal(const SimpleGraph& g, const VariableSpace& space);
/// edge ideal of G* in the 2n-variable whisker space
MonomialIdeal whisker_edge_ideal(const SimpleGraph& g);

struct GraphPredicates {
  bool connected = false;
  bool bipartite = false;
};
GraphPredicates graph_predicates(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

bool is_independent_set(const SimpleGraph& g, const std::vector<int>& s);
bool is_maximal_independent_set(const SimpleGraph& g, const std::vector<int>& s);

/// all inclusion-maximal independent sets, each sorted, in lex order
std::vector<std::vector<int>> maximal_independent_sets(const SimpleGraph& g);

/// all maximal cliques, each sorted, in lex order
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g);

/// Graph on the independent set S: {i,j} is an edge iff some vertex outside S
/// is adjacent to both. Vertices of the result are 0..|S|-1 in the order of
/// the sorted S. Throws when S is not independent.
SimpleGraph gamma_graph(const SimpleGraph& g, const std::vector<int>& s);

/// A maximal independent set S whose gamma graph is connected. Follows the
/// greedy clique-cover construction with lowest-index tie-breaks, extends to
/// a maximal independent set and re-verifies; falls back to exhaustive search
/// over all maximal independent sets. Throws when G is disconnected, and
/// logic_error if no friendly set exists at all.
std::vector<int> friendly_independent_set(const SimpleGraph& g);

/// Spanning tree of gamma_graph(g, s) with its edges in leaf order.
/// Vertices of S are relabeled 1..s along the order of discovery: members[t]
/// is the original vertex holding new label t+1. Edge j (0-based) joins new
/// labels {attach[j], j+2} with attach[j] <= j+1, and witnesses[j] is the
/// lowest-index common neighbor outside S realizing the gamma edge.
struct LeafOrderedTree {
  std::vector<int> members;                 // new label -> original vertex
  std::vector<std::pair<int, int>> edges;   // (i_j, j+1) in 1-based new labels
  std::vector<int> witnesses;               // original vertex ids
};
LeafOrderedTree spanning_tree_leaf_order(const SimpleGraph& g, const std::vector<int>& s);

/// all n^(n-2) labeled trees on n vertices via Pruefer decoding; 1 <= n <= 8
std::vector<SimpleGraph> enumerate_trees(int n);
SimpleGraph tree_from_pruefer(const std::vector<int>& seq, int n);

/// streams every labeled graph on n vertices that is connected; 1 <= n <= 7.
/// Return false from the callback to stop early.
void for_each_connected_graph(int n, const std::function<bool(const SimpleGraph&)>& fn);

/// streams every labeled forest (acyclic graph) on n vertices
void for_each_forest(int n, const std::function<bool(const SimpleGraph&)>& fn);

/// number of connected components
int component_count(const SimpleGraph& g);

}  // namespace kz
