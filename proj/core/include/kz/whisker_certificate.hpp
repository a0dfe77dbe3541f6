#pragma once

#include <vector>

#include "kz/graph.hpp"
#include "kz/homology.hpp"
#include "kz/koszul_element.hpp"

namespace kz {

/// The explicit 1-cycles and the top cycle that witness the depth upper
/// bound for powers of a whisker edge ideal. All elements are expressed in
/// original vertex indices of the 2n-variable whisker space; x_i is variable
/// i, y_i is variable n+i, and the basis letter f_i is e_{n+i}.
struct CertificateParts {
  std::vector<int> independent_set;            ///< friendly maximal S, sorted
  LeafOrderedTree tree;                         ///< leaf-ordered spanning tree of Gamma_S
  std::vector<int> non_members;                 ///< vertices outside S, ascending
  std::vector<int> anchors;                     ///< lowest S-neighbor per non-member
  std::vector<KoszulElement> edge_cycles;       ///< one per tree edge, ideal coefficients
  std::vector<KoszulElement> whisker_cycles;    ///< one per non-member, ideal coefficients
  KoszulElement top_cycle;                      ///< c over the whisker quotient
};

/// Builds S, the leaf-ordered tree, the s-1 edge cycles, the n-s whisker
/// cycles and the top cycle c; every element passes its cycle and membership
/// checks. Throws when the graph is disconnected.
CertificateParts build_certificate_cycles(const SimpleGraph& g);

struct WhiskerCertificate {
  SimpleGraph graph;
  CertificateParts parts;
  int power;
  PrimeField field;
  KoszulElement element;  ///< boundary(c) wedged with the first k-1 one-cycles
  int implied_bound;      ///< n - k + 1, valid once verified
  bool verified = false;
};

/// Assembles the certificate element for S*/I(G*)^k; requires G connected and
/// 1 <= k <= n. The element has homological degree n+k-2 and coefficients in
/// I(G*)^k.
WhiskerCertificate certificate(const SimpleGraph& g, int k,
                               const PrimeField& field = PrimeField());

/// True iff the certificate element represents a nonzero homology class in
/// its strand, which forces depth(S*/I(G*)^k) <= n-k+1. Updates
/// cert.verified.
bool verify_certificate(WhiskerCertificate& cert);

}  // namespace kz
