#include "kz/whisker_certificate.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace kz {

namespace {

CertificateParts build_parts_for_set(const SimpleGraph& g, const std::vector<int>& s);

}  // namespace

CertificateParts build_certificate_cycles(const SimpleGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("build_certificate_cycles: graph is disconnected");
  return build_parts_for_set(g, friendly_independent_set(g));
}

namespace {

CertificateParts build_parts_for_set(const SimpleGraph& g, const std::vector<int>& s) {
  int n = g.vertex_count();
  MonomialIdeal ideal = whisker_edge_ideal(g);
  CoefficientModule cycles_module = CoefficientModule::ideal_module(ideal);

  LeafOrderedTree tree = spanning_tree_leaf_order(g, s);

  std::vector<char> in_s(static_cast<size_t>(n), 0);
  for (int v : s) in_s[static_cast<size_t>(v)] = 1;

  auto xx = [&](int a, int b) {
    std::vector<int> e(static_cast<size_t>(2 * n), 0);
    e[static_cast<size_t>(a)] += 1;
    e[static_cast<size_t>(b)] += 1;
    return Monomial(std::move(e));
  };

  // edge cycles: for the j-th tree edge {i_j, j+1} with witness v_j,
  //   z_j = x_{i_j} x_{v_j} e_{j+1} - x_{j+1} x_{v_j} e_{i_j}
  std::vector<KoszulElement> edge_cycles;
  for (size_t j = 0; j < tree.edges.size(); ++j) {
    int attach = tree.members[static_cast<size_t>(tree.edges[j].first - 1)];
    int fresh = tree.members[static_cast<size_t>(tree.edges[j].second - 1)];
    int witness = tree.witnesses[j];
    KoszulElement z(cycles_module);
    z.add_term(xx(attach, witness), uint64_t(1) << fresh, 1);
    z.add_term(xx(fresh, witness), uint64_t(1) << attach, -1);
    if (!z.is_cycle()) throw std::logic_error("build_certificate_cycles: edge cycle check failed");
    edge_cycles.push_back(std::move(z));
  }

  // whisker cycles: for each vertex k outside S with anchor j_k in S,
  //   z_k = x_k x_{j_k} f_k - x_k y_k e_{j_k}
  std::vector<int> non_members, anchors;
  std::vector<KoszulElement> whisker_cycles;
  for (int v = 0; v < n; ++v) {
    if (in_s[static_cast<size_t>(v)]) continue;
    uint32_t nb = g.neighbors(v);
    int anchor = -1;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (in_s[static_cast<size_t>(u)]) {
        anchor = u;
        break;
      }
    }
    if (anchor < 0) throw std::logic_error("build_certificate_cycles: maximal set is not dominating");
    non_members.push_back(v);
    anchors.push_back(anchor);
    KoszulElement z(cycles_module);
    z.add_term(xx(v, anchor), uint64_t(1) << (n + v), 1);
    z.add_term(xx(v, n + v), uint64_t(1) << anchor, -1);
    if (!z.is_cycle()) throw std::logic_error("build_certificate_cycles: whisker cycle check failed");
    whisker_cycles.push_back(std::move(z));
  }

  // top cycle: c = prod_{i in S} x_i  e_{outside S} ^ f_{S}
  std::vector<int> ce(static_cast<size_t>(2 * n), 0);
  uint64_t jmask = 0;
  for (int v = 0; v < n; ++v) {
    if (in_s[static_cast<size_t>(v)]) {
      ce[static_cast<size_t>(v)] = 1;
      jmask |= uint64_t(1) << (n + v);
    } else {
      jmask |= uint64_t(1) << v;
    }
  }
  KoszulElement top = KoszulElement::term(CoefficientModule::quotient_module(ideal),
                                          Monomial(std::move(ce)), jmask, 1);
  if (!top.is_cycle()) throw std::logic_error("build_certificate_cycles: top cycle check failed");

  return CertificateParts{s,                      std::move(tree),        std::move(non_members),
                          std::move(anchors),     std::move(edge_cycles), std::move(whisker_cycles),
                          std::move(top)};
}

KoszulElement assemble_element(const SimpleGraph& g, const CertificateParts& parts, int k,
                               const MonomialIdeal& power_ideal) {
  int n = g.vertex_count();
  // the available one-cycles in order: edge cycles first, whisker cycles after
  std::vector<const KoszulElement*> one_cycles;
  for (const auto& z : parts.edge_cycles) one_cycles.push_back(&z);
  for (const auto& z : parts.whisker_cycles) one_cycles.push_back(&z);

  CoefficientModule free_mod = CoefficientModule::free_module(power_ideal.space());
  KoszulElement element = parts.top_cycle.boundary_in_free();
  for (int t = 0; t < k - 1; ++t)
    element = wedge(element, one_cycles[static_cast<size_t>(t)]->cast_to(free_mod), free_mod);
  // coefficients of boundary(c) and of each one-cycle lie in I, so the wedge
  // lands in I^k; the cast enforces it
  element = element.cast_to(CoefficientModule::ideal_module(power_ideal));
  if (element.homological_degree() != n + k - 2)
    throw std::logic_error("certificate: unexpected homological degree");
  if (!element.is_cycle()) throw std::logic_error("certificate: element is not a cycle");
  return element;
}

}  // namespace

WhiskerCertificate certificate(const SimpleGraph& g, int k, const PrimeField& field) {
  int n = g.vertex_count();
  if (k < 1 || k > n) throw std::invalid_argument("certificate: power must be in 1..n");
  if (!is_connected(g)) throw std::invalid_argument("certificate: graph is disconnected");
  MonomialIdeal power_ideal = ideal_power(whisker_edge_ideal(g), k);

  // The element built from one friendly set can represent the zero class
  // while another friendly set lands on a nonvanishing strand, so try the
  // greedy choice first and fall back to the remaining friendly maximal
  // independent sets in lex order.
  std::vector<std::vector<int>> candidates{friendly_independent_set(g)};
  for (const auto& s : maximal_independent_sets(g)) {
    if (s == candidates.front()) continue;
    if (is_connected(gamma_graph(g, s))) candidates.push_back(s);
  }

  std::optional<WhiskerCertificate> first;
  for (const auto& s : candidates) {
    CertificateParts parts = build_parts_for_set(g, s);
    KoszulElement element = assemble_element(g, parts, k, power_ideal);
    WhiskerCertificate cert{g, std::move(parts), k, field, std::move(element), n - k + 1, false};
    if (homology_class_nonzero(cert.element, field)) {
      cert.verified = true;
      return cert;
    }
    if (!first) first = std::move(cert);
  }
  return std::move(*first);
}

bool verify_certificate(WhiskerCertificate& cert) {
  cert.verified = homology_class_nonzero(cert.element, cert.field);
  return cert.verified;
}

}  // namespace kz
