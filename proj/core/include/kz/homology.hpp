#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kz/koszul_element.hpp"
#include "kz/monomial_ideal.hpp"
#include "kz/prime_field.hpp"
#include "kz/strand.hpp"

namespace kz {

/// dim_K H_i(x; M)_a over GF(p)
int strand_homology_rank(const CoefficientModule& module, const Monomial& degree, int i,
                         const PrimeField& field);

/// homology dimensions summed over all candidate multidegrees (the lcm
/// lattice of the module ideal), indexed by homological degree 0..N
std::vector<int> total_homology_dims(const CoefficientModule& module, const PrimeField& field,
                                     uint64_t lattice_cap = 200000);

/// per-degree homology dimensions in homological degree i over an explicit
/// candidate list; degrees with zero homology are omitted
std::map<Monomial, int> homology_dims_by_degree(const CoefficientModule& module, int i,
                                                const std::vector<Monomial>& candidates,
                                                const PrimeField& field);

enum class CandidateMode {
  Auto,       ///< lcm lattice; on capacity overflow, stream the exponent box
  Lattice,    ///< lcm lattice only; capacity errors propagate
  BoxStream,  ///< stream the exponent box, restricted to lcm-closure points
};

struct DepthOptions {
  PrimeField field{PrimeField::kDefaultPrime};
  uint64_t lattice_cap = 200000;
  CandidateMode candidates = CandidateMode::Auto;
};

struct DepthResult {
  int depth = 0;
  int projective_dimension = 0;
  Monomial witness;          ///< multidegree where the top homology was found
  bool used_fallback = false;
  uint64_t strands_scanned = 0;
};

/// depth(S/I) = N - max{ i : H_i(x; S/I) != 0 }, scanning all candidate
/// multidegrees. Rejects the unit ideal.
DepthResult depth(const MonomialIdeal& ideal, const DepthOptions& options = {});

/// true iff the class of the multi-homogeneous cycle z is nonzero in the
/// homology of its own strand; throws when z is not a cycle
bool homology_class_nonzero(const KoszulElement& z, const PrimeField& field);

/// Cycles whose classes form a basis of H_i(x; I) (ideal coefficients),
/// scanning candidate degrees in ascending order. Representatives are
/// reduced-echelon coset representatives, deterministic run to run.
std::vector<KoszulElement> homology_basis_cycles(const MonomialIdeal& ideal, int i,
                                                 const PrimeField& field,
                                                 uint64_t lattice_cap = 200000);

}  // namespace kz
