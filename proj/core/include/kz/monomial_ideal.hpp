#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "kz/monomial.hpp"
#include "kz/variable_space.hpp"

namespace kz {

/// A monomial ideal, stored by its unique minimal generating set, sorted in
/// ascending lex order on exponent vectors. The zero ideal has no generators;
/// the unit ideal is generated by the unit monomial.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  /// minimalizes: keeps only divisibility-minimal generators, deduplicated,
  /// canonically sorted
  static MonomialIdeal from_generators(VariableSpace space, std::vector<Monomial> gens);
  static MonomialIdeal zero(VariableSpace space) { return from_generators(std::move(space), {}); }
  static MonomialIdeal unit_ideal(VariableSpace space);

  const VariableSpace& space() const { return space_; }
  int nvars() const { return space_.count(); }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  /// proper means neither zero-ring degenerate: contains(u) for unit fails
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  /// membership: divisible by some generator
  bool contains(const Monomial& m) const;

  /// max exponent of variable v over all generators
  int max_exponent(int v) const;
  /// the componentwise bound c = (c_1, ..., c_N)
  std::vector<int> exponent_bounds() const;

  bool operator==(const MonomialIdeal& other) const {
    return space_ == other.space_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
  VariableSpace space_;
  std::vector<Monomial> gens_;
};

/// divisibility-minimal subset of a generator list (idempotent)
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// I^k as the minimalized set of all k-fold products of generators.
/// k = 0 gives the unit ideal; k < 0 throws.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int k);

/// (I : m), generated by { u / gcd(u, m) : u in G(I) }
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// image of I under substituting variable v -> 0: drops every generator
/// divisible by v (the ambient space is unchanged)
MonomialIdeal substitute_zero(const MonomialIdeal& ideal, int v);

/// sum: ideal generated by both generator sets (same space)
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const Monomial& extra);

/// Polarization: splits x_i^a into x_{i,1}...x_{i,a}. Returns the squarefree
/// ideal in the polarized space (widths c_i = max generator degree per
/// variable, at least 1).
std::pair<MonomialIdeal, VariableSpace> polarize_ideal(const MonomialIdeal& ideal);

/// polarization of a single monomial into `target`
Monomial polarize_monomial(const Monomial& u, const VariableSpace& target);

/// substitutes every split variable x_{i,j} back to x_i; recovers the
/// original generators of a polarized ideal
MonomialIdeal depolarize_ideal(const MonomialIdeal& ideal, const VariableSpace& source);

/// One-step polarization with respect to variable var: each generator u with
/// var^2 | u becomes (u / x_var) * y for a fresh variable y appended at the
/// end of the space (label `fresh_label`, auto-chosen when empty).
std::pair<MonomialIdeal, VariableSpace> one_step_polarize_ideal(const MonomialIdeal& ideal, int var,
                                                                std::string fresh_label = "");

/// Closure of G(I) plus the unit under pairwise lcm, sorted canonically.
/// Throws capacity_error when the closure exceeds `cap`.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, uint64_t cap = 200000);

/// Streams the per-variable exponent-value box: every vector whose j-th
/// entry is 0 or an exponent of x_j realized by some generator. This is a
/// superset of the lcm lattice. Iteration order is descending lex so that
/// high-degree candidates come first. Return false from the callback to stop.
void for_each_exponent_box_candidate(const MonomialIdeal& ideal,
                                     const std::function<bool(const Monomial&)>& fn);

/// exact test for membership in the lcm closure: a equals the lcm of the
/// generators dividing it
bool is_lcm_of_generators(const MonomialIdeal& ideal, const Monomial& a);

}  // namespace kz
