#pragma once

#include <cstdint>
#include <vector>

#include "kz/koszul_element.hpp"
#include "kz/matrix_mod_p.hpp"
#include "kz/monomial.hpp"
#include "kz/prime_field.hpp"

namespace kz {

/// The multigraded strand of the Koszul complex of a coefficient module at a
/// fixed multidegree a. In homological degree i the basis consists of the
/// subsets J of supp(a) with |J| = i whose coefficient monomial
/// u_J = x^(a - 1_J) is admitted by the module; u_J determines J and vice
/// versa. Subsets are bitmasks over the support positions, and bases are
/// sorted by ascending lex order on u_J (the mask holding the lowest
/// differing support bit comes first).
///
/// Boundary matrices have entries +-1: J maps to J minus its t-th index with
/// sign (-1)^(t+1), the term surviving exactly when the smaller subset is
/// itself a basis element.
///
/// Holds a reference to the module: the module must outlive the strand.
class Strand {
public:
  Strand(const CoefficientModule& module, const Monomial& degree);

  const Monomial& degree() const { return degree_; }
  const std::vector<int>& support() const { return supp_; }
  int support_size() const { return static_cast<int>(supp_.size()); }
  /// number of generators of the module ideal dividing the degree
  int dividing_generators() const { return dividing_; }

  /// is x^(a - 1_M) inside the module ideal?
  bool monomial_in_ideal(uint32_t mask) const { return in_ideal_[mask]; }
  /// is the subset a basis element for this module kind?
  bool admitted(uint32_t mask) const;

  int dim(int i) const;
  const std::vector<uint32_t>& basis(int i) const;

  /// rows of the boundary map from level i to level i-1; row r is the image
  /// of basis(i)[r] expressed in basis(i-1) coordinates
  std::vector<std::vector<uint32_t>> boundary_rows(int i, const PrimeField& field) const;

  /// rank of the boundary map out of level i
  int boundary_rank(int i, const PrimeField& field) const;

  /// dim ker - rank of the incoming boundary at level i
  int homology_dim(int i, const PrimeField& field) const;

  /// all homology dimensions, index 0..support_size()
  std::vector<int> homology_dims(const PrimeField& field) const;

  /// coordinates of a multi-homogeneous element of this degree and level;
  /// throws when a term is not a strand basis element
  std::vector<uint32_t> coordinates_of(const KoszulElement& z, int level,
                                       const PrimeField& field) const;

  /// element with the given level-i coordinates (coefficients lifted to the
  /// symmetric range around zero)
  KoszulElement element_of(const std::vector<uint32_t>& coords, int level,
                           const PrimeField& field) const;

  /// monomial u_M for a subset mask
  Monomial coefficient_monomial(uint32_t mask) const;
  /// variable-index bitmask of a subset mask
  uint64_t variable_mask(uint32_t mask) const;

  /// position of a mask inside basis(i); -1 when absent
  int basis_index(int i, uint32_t mask) const;

  /// basis-mask order described above
  static bool mask_less(uint32_t a, uint32_t b) {
    uint32_t diff = a ^ b;
    if (!diff) return false;
    uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
  }

private:
  const CoefficientModule& module_;
  Monomial degree_;
  std::vector<int> supp_;
  int dividing_ = 0;
  std::vector<char> in_ideal_;  // 2^s membership bitset
  mutable std::vector<std::vector<uint32_t>> levels_;
  mutable std::vector<char> level_built_;

  void build_level(int i) const;
};

}  // namespace kz
