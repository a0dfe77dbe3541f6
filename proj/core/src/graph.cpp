#include "kz/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kz {

namespace {

int lowest_bit(uint32_t m) { return std::countr_zero(m); }

}  // namespace

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0 || n > 32) throw std::invalid_argument("SimpleGraph: vertex count must be in 0..32");
  adj_.assign(static_cast<size_t>(n), 0);
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("SimpleGraph: loop edge");
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("SimpleGraph: edge endpoint out of range");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [i, j] : edges_) {
    adj_[static_cast<size_t>(i)] |= uint32_t(1) << j;
    adj_[static_cast<size_t>(j)] |= uint32_t(1) << i;
  }
}

SimpleGraph SimpleGraph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("SimpleGraph::cycle: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SimpleGraph(n, std::move(e));
}

SimpleGraph SimpleGraph::edgeless(int n) { return SimpleGraph(n, {}); }

bool SimpleGraph::has_edge(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) return false;
  return (adj_[static_cast<size_t>(i)] >> j) & 1u;
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

WhiskerGraph whisker(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("whisker: need at least one vertex");
  if (2 * n > 32) throw std::invalid_argument("whisker: base graph too large");
  std::vector<std::pair<int, int>> edges = g.edges();
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return WhiskerGraph{g, SimpleGraph(2 * n, std::move(edges))};
}

MonomialIdeal edge_ideal(const SimpleGraph& g, const VariableSpace& space) {
  if (space.count() < g.vertex_count())
    throw std::invalid_argument("edge_ideal: variable space smaller than vertex set");
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (auto [i, j] : g.edges()) {
    std::vector<int> e(static_cast<size_t>(space.count()), 0);
    e[static_cast<size_t>(i)] = 1;
    e[static_cast<size_t>(j)] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::from_generators(space, std::move(gens));
}

MonomialIdeal whisker_edge_ideal(const SimpleGraph& g) {
  WhiskerGraph w = whisker(g);
  return edge_ideal(w.graph, VariableSpace::whisker(g.vertex_count()));
}

GraphPredicates graph_predicates(const SimpleGraph& g) {
  GraphPredicates out;
  int n = g.vertex_count();
  if (n == 0) return {true, true};
  std::vector<int> color(static_cast<size_t>(n), -1);
  int seen = 0;
  bool bipartite = true;
  // BFS from vertex 0 only; other components just get 2-colored
  std::vector<int> queue;
  bool first = true;
  int reached_from_first = 0;
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    queue.assign(1, start);
    int comp = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++comp;
      uint32_t nb = g.neighbors(v);
      while (nb) {
        int u = lowest_bit(nb);
        nb &= nb - 1;
        if (color[static_cast<size_t>(u)] == -1) {
          color[static_cast<size_t>(u)] = color[static_cast<size_t>(v)] ^ 1;
          queue.push_back(u);
        } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
          bipartite = false;
        }
      }
    }
    if (first) reached_from_first = comp;
    first = false;
    seen += comp;
  }
  out.connected = (reached_from_first == n);
  out.bipartite = bipartite;
  (void)seen;
  return out;
}

bool is_connected(const SimpleGraph& g) { return graph_predicates(g).connected; }

int component_count(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> mark(static_cast<size_t>(n), 0);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (mark[static_cast<size_t>(s)]) continue;
    ++comps;
    mark[static_cast<size_t>(s)] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      uint32_t nb = g.neighbors(v);
      while (nb) {
        int u = lowest_bit(nb);
        nb &= nb - 1;
        if (!mark[static_cast<size_t>(u)]) {
          mark[static_cast<size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return comps;
}

bool is_independent_set(const SimpleGraph& g, const std::vector<int>& s) {
  uint32_t mask = 0;
  for (int v : s) mask |= uint32_t(1) << v;
  for (int v : s)
    if (g.neighbors(v) & mask) return false;
  return true;
}

bool is_maximal_independent_set(const SimpleGraph& g, const std::vector<int>& s) {
  if (!is_independent_set(g, s)) return false;
  uint32_t mask = 0;
  for (int v : s) mask |= uint32_t(1) << v;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((mask >> v) & 1u) continue;
    if ((g.neighbors(v) & mask) == 0) return false;  // v could be added
  }
  return true;
}

namespace {

std::vector<int> mask_to_vertices(uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(lowest_bit(mask));
    mask &= mask - 1;
  }
  return out;
}

/// Bron-Kerbosch with pivoting over an arbitrary adjacency oracle
void bron_kerbosch(const std::vector<uint32_t>& adj, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<uint32_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  uint32_t px = p | x;
  int pivot = -1, best = -1;
  uint32_t scan = px;
  while (scan) {
    int v = lowest_bit(scan);
    scan &= scan - 1;
    int cnt = std::popcount(p & adj[static_cast<size_t>(v)]);
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  uint32_t cand = p & ~adj[static_cast<size_t>(pivot)];
  while (cand) {
    int v = lowest_bit(cand);
    cand &= cand - 1;
    uint32_t vb = uint32_t(1) << v;
    bron_kerbosch(adj, r | vb, p & adj[static_cast<size_t>(v)], x & adj[static_cast<size_t>(v)], out);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<uint32_t> adj(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
  std::vector<uint32_t> masks;
  if (n > 0) {
    uint32_t all = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    bron_kerbosch(adj, 0, all, 0, masks);
  }
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (uint32_t m : masks) out.push_back(mask_to_vertices(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> maximal_independent_sets(const SimpleGraph& g) {
  // maximal independent sets = maximal cliques of the complement
  int n = g.vertex_count();
  std::vector<uint32_t> adj(static_cast<size_t>(n));
  uint32_t all = n == 0 ? 0 : (n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1);
  for (int v = 0; v < n; ++v)
    adj[static_cast<size_t>(v)] = all & ~g.neighbors(v) & ~(uint32_t(1) << v);
  std::vector<uint32_t> masks;
  if (n > 0) bron_kerbosch(adj, 0, all, 0, masks);
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (uint32_t m : masks) out.push_back(mask_to_vertices(m));
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph gamma_graph(const SimpleGraph& g, const std::vector<int>& s) {
  if (!is_independent_set(g, s)) throw std::invalid_argument("gamma_graph: S is not independent");
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  uint32_t smask = 0;
  for (int v : sorted) smask |= uint32_t(1) << v;
  int k = static_cast<int>(sorted.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      uint32_t common = g.neighbors(sorted[static_cast<size_t>(a)]) &
                        g.neighbors(sorted[static_cast<size_t>(b)]) & ~smask;
      if (common) edges.emplace_back(a, b);
    }
  return SimpleGraph(k, std::move(edges));
}

namespace {

/// greedy construction: cover the maximal cliques by independent
/// representatives, each new one picked outside everything covered so far
std::vector<int> greedy_friendly_seed(const SimpleGraph& g) {
  auto cliques = maximal_cliques(g);
  int r = static_cast<int>(cliques.size());
  if (r == 0) return {};
  std::vector<uint32_t> cmask(static_cast<size_t>(r), 0);
  for (int c = 0; c < r; ++c)
    for (int v : cliques[static_cast<size_t>(c)]) cmask[static_cast<size_t>(c)] |= uint32_t(1) << v;

  std::vector<int> chosen;
  std::vector<char> covered(static_cast<size_t>(r), 0);
  uint32_t covered_union = 0;

  auto close_covered = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < r; ++c) {
        if (covered[static_cast<size_t>(c)]) continue;
        if ((cmask[static_cast<size_t>(c)] & ~covered_union) == 0) {
          covered[static_cast<size_t>(c)] = 1;
          changed = true;
        }
      }
      // union only grows through newly covered cliques
      uint32_t u = 0;
      for (int c = 0; c < r; ++c)
        if (covered[static_cast<size_t>(c)]) u |= cmask[static_cast<size_t>(c)];
      if (u != covered_union) {
        covered_union = u;
        changed = true;
      }
    }
  };

  int v1 = cliques[0][0];
  chosen.push_back(v1);
  for (int c = 0; c < r; ++c)
    if ((cmask[static_cast<size_t>(c)] >> v1) & 1u) covered[static_cast<size_t>(c)] = 1;
  for (int c = 0; c < r; ++c)
    if (covered[static_cast<size_t>(c)]) covered_union |= cmask[static_cast<size_t>(c)];
  close_covered();

  for (;;) {
    bool all = true;
    int pick = -1;
    for (int c = 0; c < r; ++c) {
      if (covered[static_cast<size_t>(c)]) continue;
      all = false;
      if ((cmask[static_cast<size_t>(c)] & covered_union) != 0) {
        pick = c;
        break;
      }
    }
    if (all) break;
    if (pick == -1) break;  // disconnected; caller rejects earlier
    uint32_t fresh = cmask[static_cast<size_t>(pick)] & ~covered_union;
    int v = lowest_bit(fresh);
    chosen.push_back(v);
    for (int c = 0; c < r; ++c)
      if ((cmask[static_cast<size_t>(c)] >> v) & 1u) covered[static_cast<size_t>(c)] = 1;
    for (int c = 0; c < r; ++c)
      if (covered[static_cast<size_t>(c)]) covered_union |= cmask[static_cast<size_t>(c)];
    close_covered();
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<int> extend_to_maximal(const SimpleGraph& g, std::vector<int> s) {
  uint32_t mask = 0;
  for (int v : s) mask |= uint32_t(1) << v;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((mask >> v) & 1u) continue;
    if ((g.neighbors(v) & mask) == 0) {
      s.push_back(v);
      mask |= uint32_t(1) << v;
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<int> friendly_independent_set(const SimpleGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("friendly_independent_set: graph is disconnected");
  std::vector<int> seed = greedy_friendly_seed(g);
  std::vector<int> s = extend_to_maximal(g, std::move(seed));
  if (is_connected(gamma_graph(g, s))) return s;
  // exhaustive fallback, lex order
  for (const auto& cand : maximal_independent_sets(g))
    if (is_connected(gamma_graph(g, cand))) return cand;
  throw std::logic_error("friendly_independent_set: no maximal independent set with connected gamma graph");
}

LeafOrderedTree spanning_tree_leaf_order(const SimpleGraph& g, const std::vector<int>& s) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  SimpleGraph gamma = gamma_graph(g, sorted);
  if (!is_connected(gamma))
    throw std::invalid_argument("spanning_tree_leaf_order: gamma graph is disconnected");
  int k = gamma.vertex_count();
  uint32_t smask = 0;
  for (int v : sorted) smask |= uint32_t(1) << v;

  LeafOrderedTree tree;
  if (k == 0) return tree;
  auto lowest_witness = [&](int a, int b) {
    uint32_t common = g.neighbors(a) & g.neighbors(b) & ~smask;
    return lowest_bit(common);
  };

  std::vector<int> new_label(static_cast<size_t>(k), 0);  // gamma vertex -> 1-based label
  if (k == 1) {
    tree.members = {sorted[0]};
    return tree;
  }

  // first edge: lex-smallest edge of gamma; smaller endpoint becomes label 1
  auto first = gamma.edges().front();
  tree.members.push_back(sorted[static_cast<size_t>(first.first)]);
  tree.members.push_back(sorted[static_cast<size_t>(first.second)]);
  new_label[static_cast<size_t>(first.first)] = 1;
  new_label[static_cast<size_t>(first.second)] = 2;
  tree.edges.emplace_back(1, 2);
  tree.witnesses.push_back(lowest_witness(tree.members[0], tree.members[1]));

  while (static_cast<int>(tree.members.size()) < k) {
    // among edges from the labeled part to a new vertex, pick the lowest
    // attachment label, then the lowest original id of the new vertex
    int best_attach = -1, best_new = -1;
    for (int labeled = 0; labeled < static_cast<int>(tree.members.size()); ++labeled) {
      int gv = -1;
      // locate gamma vertex of this member
      for (int t = 0; t < k; ++t)
        if (sorted[static_cast<size_t>(t)] == tree.members[static_cast<size_t>(labeled)]) gv = t;
      uint32_t nb = gamma.neighbors(gv);
      while (nb) {
        int u = lowest_bit(nb);
        nb &= nb - 1;
        if (new_label[static_cast<size_t>(u)] != 0) continue;
        if (best_attach == -1 || sorted[static_cast<size_t>(u)] < best_new) {
          best_attach = labeled + 1;
          best_new = sorted[static_cast<size_t>(u)];
        }
        break;  // labeled loop runs in label order, first hit per label is enough
      }
      if (best_attach != -1) break;
    }
    // find gamma index of best_new
    int gnew = -1;
    for (int t = 0; t < k; ++t)
      if (sorted[static_cast<size_t>(t)] == best_new) gnew = t;
    int label = static_cast<int>(tree.members.size()) + 1;
    new_label[static_cast<size_t>(gnew)] = label;
    tree.members.push_back(best_new);
    tree.edges.emplace_back(best_attach, label);
    tree.witnesses.push_back(lowest_witness(tree.members[static_cast<size_t>(best_attach - 1)], best_new));
  }
  return tree;
}

SimpleGraph tree_from_pruefer(const std::vector<int>& seq, int n) {
  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int v : seq) ++degree[static_cast<size_t>(v)];
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<size_t>(leaf)] == 1 && !used[static_cast<size_t>(leaf)]) {
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        used[static_cast<size_t>(leaf)] = 1;
        --degree[static_cast<size_t>(v)];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (used[static_cast<size_t>(v)] || degree[static_cast<size_t>(v)] != 1) continue;
    if (a == -1)
      a = v;
    else
      b = v;
  }
  edges.emplace_back(a, b);
  return SimpleGraph(n, std::move(edges));
}

std::vector<SimpleGraph> enumerate_trees(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_trees: n must be in 1..8");
  std::vector<SimpleGraph> out;
  if (n == 1) {
    out.push_back(SimpleGraph::edgeless(1));
    return out;
  }
  if (n == 2) {
    out.push_back(SimpleGraph(2, {{0, 1}}));
    return out;
  }
  std::vector<int> seq(static_cast<size_t>(n - 2), 0);
  for (;;) {
    out.push_back(tree_from_pruefer(seq, n));
    int pos = n - 3;
    while (pos >= 0 && seq[static_cast<size_t>(pos)] == n - 1) --pos;
    if (pos < 0) break;
    ++seq[static_cast<size_t>(pos)];
    for (int t = pos + 1; t <= n - 3; ++t) seq[static_cast<size_t>(t)] = 0;
  }
  return out;
}

void for_each_connected_graph(int n, const std::function<bool(const SimpleGraph&)>& fn) {
  if (n < 1 || n > 7) throw std::invalid_argument("for_each_connected_graph: n must be in 1..7");
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
  int m = static_cast<int>(all_edges.size());
  for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) edges.push_back(all_edges[static_cast<size_t>(e)]);
    SimpleGraph g(n, std::move(edges));
    if (!is_connected(g)) continue;
    if (!fn(g)) return;
  }
}

void for_each_forest(int n, const std::function<bool(const SimpleGraph&)>& fn) {
  if (n < 1 || n > 7) throw std::invalid_argument("for_each_forest: n must be in 1..7");
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
  int m = static_cast<int>(all_edges.size());
  for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1) edges.push_back(all_edges[static_cast<size_t>(e)]);
    SimpleGraph g(n, std::move(edges));
    // acyclic iff components + edges = vertices
    if (component_count(g) + g.edge_count() != n) continue;
    if (!fn(g)) return;
  }
}

}  // namespace kz
