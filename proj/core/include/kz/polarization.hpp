#pragma once

#include <map>
#include <string>
#include <vector>

#include "kz/graph.hpp"
#include "kz/homology.hpp"
#include "kz/koszul_element.hpp"
#include "kz/monomial_ideal.hpp"

namespace kz {

/// Source ideal together with its polarized companion: bounds c_i are the
/// maximal generator degrees, the target space interleaves the split
/// variables x_{1,1},...,x_{1,c_1},x_{2,1},...
struct PolarizationContext {
  MonomialIdeal source_ideal;
  std::vector<int> bounds;
  VariableSpace target;
  MonomialIdeal polarized_ideal;
};

PolarizationContext make_polarization_context(const MonomialIdeal& ideal);

/// Term-by-term polarization of a multi-homogeneous element of multidegree
/// <= c: u_J e_J becomes u_J^pol wedged from the letters e_{j, deg_j(u_J)+1}.
/// The module kind carries over (ideal modules map to the polarized ideal).
/// Throws when the multidegree exceeds a bound, naming the variable.
KoszulElement polarize_element(const KoszulElement& f, const PolarizationContext& ctx);

/// One-step polarization of a multi-homogeneous cycle with respect to one
/// variable, over the one-step polarized ideal with a fresh variable appended
/// at the end of the space. Coefficients divisible by var^2 lose one factor
/// of var and gain the fresh variable; a term whose index set contains var
/// and whose coefficient is divisible by var exactly once trades the letter
/// e_var for the fresh letter. Returns a cycle over the one-step ideal;
/// unchanged (up to the extra variable) when deg_var(z) <= 1.
KoszulElement one_step_polarize_cycle(const KoszulElement& z, int var);

/// The cycle-level reduction modulo a variable that is a nonzerodivisor on
/// the coefficient module: write z = e_v wedge z0 + z1 and return z1 with its
/// coefficients reduced mod x_v, re-indexed into the space without v. The
/// nonzerodivisor hypothesis is checked by the conservative sufficient
/// condition that v appears in no generator (always true for free modules).
KoszulElement comparison_reduce(const KoszulElement& z, int v);

/// The cycles x_{i_1}...x_{i_k} e_{j_1} ^ ... ^ e_{j_{n-k}} ^ f_{i_1} ^ ... ^
/// f_{i_k} over S*/I(G*), one per maximal independent set {i_1,...,i_k}, whose
/// classes form a basis of H_n of the whisker quotient.
std::vector<KoszulElement> whisker_hn_basis(const SimpleGraph& g);

struct PolarizedBasisReport {
  int homological_degree = 0;
  int rank = 0;                        ///< number of basis cycles upstairs
  std::map<Monomial, int> dims_by_degree;  ///< polarized-side homology dims
  int polarized_total = 0;
  bool pass = false;
  std::vector<std::string> witness_failures;
};

/// Checks that polarizing a homology basis of H_i(x; I) yields a basis of
/// H_i(x^pol; I^pol): every polarized cycle is a cycle, the dimensions agree,
/// and the polarized classes stay linearly independent modulo boundaries.
PolarizedBasisReport verify_polarized_basis(const MonomialIdeal& ideal, int i,
                                            const PrimeField& field);

}  // namespace kz
