#include "kz/polarization.hpp"

#include <algorithm>
#include <stdexcept>

#include "kz/errors.hpp"

namespace kz {

PolarizationContext make_polarization_context(const MonomialIdeal& ideal) {
  auto [polarized, target] = polarize_ideal(ideal);
  return PolarizationContext{ideal, ideal.exponent_bounds(), target, polarized};
}

namespace {

CoefficientModule transported_module(const KoszulElement& f, const PolarizationContext& ctx) {
  switch (f.module().kind()) {
    case ModuleKind::Free: return CoefficientModule::free_module(ctx.target);
    case ModuleKind::Ideal: return CoefficientModule::ideal_module(ctx.polarized_ideal);
    case ModuleKind::Quotient: return CoefficientModule::quotient_module(ctx.polarized_ideal);
  }
  throw std::logic_error("transported_module: unreachable");
}

}  // namespace

KoszulElement polarize_element(const KoszulElement& f, const PolarizationContext& ctx) {
  if (f.space() != ctx.source_ideal.space())
    throw space_mismatch_error("polarize_element: element lives in a different space");
  if (f.module().kind() != ModuleKind::Free && f.module().ideal() != ctx.source_ideal)
    throw std::invalid_argument("polarize_element: module ideal differs from the context ideal");
  KoszulElement out(transported_module(f, ctx));
  if (f.is_zero()) return out;
  Monomial degree = *f.multidegree();
  for (int v = 0; v < degree.nvars(); ++v)
    if (degree.exponent(v) > ctx.bounds[static_cast<size_t>(v)])
      throw std::invalid_argument("polarize_element: multidegree exceeds the bound in variable " +
                                  ctx.source_ideal.space().label(v));
  for (const auto& [key, c] : f.terms()) {
    Monomial upol = polarize_monomial(key.u, ctx.target);
    uint64_t jmask = 0;
    for (int j : mask_to_indices(key.jmask)) {
      int slot = ctx.target.split_slot(j, key.u.exponent(j) + 1);
      jmask |= uint64_t(1) << slot;
    }
    // ascending source letters map to ascending interleaved positions, so no
    // reordering sign appears
    out.add_term(upol, jmask, c);
  }
  return out;
}

KoszulElement one_step_polarize_cycle(const KoszulElement& z, int var) {
  if (z.module().kind() != ModuleKind::Ideal)
    throw std::invalid_argument("one_step_polarize_cycle: cycle must have ideal coefficients");
  if (!z.is_cycle()) throw std::invalid_argument("one_step_polarize_cycle: input is not a cycle");
  const MonomialIdeal& ideal = z.module().ideal();
  auto [step_ideal, bigger] = one_step_polarize_ideal(ideal, var);
  int fresh = bigger.count() - 1;
  KoszulElement out(CoefficientModule::ideal_module(step_ideal));
  for (const auto& [key, c] : z.terms()) {
    std::vector<int> e = key.u.exponents();
    e.push_back(0);
    uint64_t jmask = key.jmask;
    int64_t coeff = c;
    int dv = key.u.exponent(var);
    bool in_j = (key.jmask >> var) & 1;
    if (dv >= 2) {
      // coefficient loses one factor of var and gains the fresh variable
      --e[static_cast<size_t>(var)];
      e[static_cast<size_t>(fresh)] = 1;
    } else if (dv == 1 && in_j) {
      // trade the letter e_var for the fresh letter; the fresh variable sits
      // at the end, so moving it past the later letters costs a sign
      jmask = (jmask & ~(uint64_t(1) << var)) | (uint64_t(1) << fresh);
      uint64_t later = key.jmask >> (var + 1);
      if (popcount64(later) % 2 == 1) coeff = -coeff;
    }
    out.add_term(Monomial(std::move(e)), jmask, coeff);
  }
  if (!out.is_cycle()) throw std::logic_error("one_step_polarize_cycle: output failed the cycle check");
  return out;
}

KoszulElement comparison_reduce(const KoszulElement& z, int v) {
  const CoefficientModule& module = z.module();
  int n = module.nvars();
  if (v < 0 || v >= n) throw std::out_of_range("comparison_reduce: variable out of range");
  if (module.kind() != ModuleKind::Free) {
    for (const auto& g : module.ideal().generators())
      if (g.exponent(v) > 0)
        throw std::invalid_argument(
            "comparison_reduce: variable appears in a generator; nonzerodivisor check failed");
  }
  if (!z.is_cycle()) throw std::invalid_argument("comparison_reduce: input is not a cycle");

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    if (i != v) labels.push_back(module.space().label(i));
  VariableSpace smaller(std::move(labels));

  auto shrink = [&](const Monomial& m) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(n - 1));
    for (int i = 0; i < n; ++i)
      if (i != v) e.push_back(m.exponent(i));
    return Monomial(std::move(e));
  };
  std::vector<Monomial> gens;
  for (const auto& g : module.ideal().generators()) gens.push_back(shrink(g));
  MonomialIdeal small_ideal = MonomialIdeal::from_generators(smaller, std::move(gens));

  CoefficientModule target = [&]() {
    switch (module.kind()) {
      case ModuleKind::Free: return CoefficientModule::free_module(smaller);
      case ModuleKind::Ideal: return CoefficientModule::ideal_module(small_ideal);
      case ModuleKind::Quotient: return CoefficientModule::quotient_module(small_ideal);
    }
    throw std::logic_error("comparison_reduce: unreachable");
  }();

  KoszulElement out(target);
  for (const auto& [key, c] : z.terms()) {
    if ((key.jmask >> v) & 1) continue;          // the e_v wedge part drops
    if (key.u.exponent(v) > 0) continue;         // coefficient reduces to zero mod x_v
    uint64_t low = key.jmask & ((uint64_t(1) << v) - 1);
    uint64_t high = key.jmask >> (v + 1);
    out.add_term(shrink(key.u), low | (high << v), c);
  }
  return out;
}

std::vector<KoszulElement> whisker_hn_basis(const SimpleGraph& g) {
  int n = g.vertex_count();
  MonomialIdeal ideal = whisker_edge_ideal(g);
  CoefficientModule module = CoefficientModule::quotient_module(ideal);
  std::vector<KoszulElement> out;
  for (const auto& s : maximal_independent_sets(g)) {
    std::vector<int> e(static_cast<size_t>(2 * n), 0);
    uint64_t jmask = 0;
    std::vector<char> in_s(static_cast<size_t>(n), 0);
    for (int i : s) in_s[static_cast<size_t>(i)] = 1;
    for (int i = 0; i < n; ++i) {
      if (in_s[static_cast<size_t>(i)]) {
        e[static_cast<size_t>(i)] = 1;                    // coefficient x_i
        jmask |= uint64_t(1) << (n + i);                  // letter f_i
      } else {
        jmask |= uint64_t(1) << i;                        // letter e_i
      }
    }
    out.push_back(KoszulElement::term(module, Monomial(std::move(e)), jmask, 1));
  }
  return out;
}

PolarizedBasisReport verify_polarized_basis(const MonomialIdeal& ideal, int i,
                                            const PrimeField& field) {
  PolarizedBasisReport report;
  report.homological_degree = i;
  PolarizationContext ctx = make_polarization_context(ideal);
  CoefficientModule pol_module = CoefficientModule::ideal_module(ctx.polarized_ideal);

  std::vector<KoszulElement> basis = homology_basis_cycles(ideal, i, field);
  report.rank = static_cast<int>(basis.size());

  std::vector<Monomial> lattice = lcm_lattice(ctx.polarized_ideal);
  report.dims_by_degree = homology_dims_by_degree(pol_module, i, lattice, field);
  for (const auto& [deg, d] : report.dims_by_degree) report.polarized_total += d;
  if (report.polarized_total != report.rank)
    report.witness_failures.push_back("dimension mismatch: H_i upstairs has rank " +
                                      std::to_string(report.rank) + " but the polarized side has " +
                                      std::to_string(report.polarized_total));

  // group the polarized cycles by multidegree and check independence modulo
  // boundaries inside each strand
  std::map<Monomial, std::vector<KoszulElement>> by_degree;
  for (const auto& z : basis) {
    KoszulElement zp = polarize_element(z, ctx);
    if (!zp.is_cycle()) {
      report.witness_failures.push_back("polarized element is not a cycle");
      continue;
    }
    if (zp.is_zero()) {
      report.witness_failures.push_back("polarized element vanished");
      continue;
    }
    by_degree[*zp.multidegree()].push_back(std::move(zp));
  }
  for (const auto& [deg, cycles] : by_degree) {
    Strand strand(pol_module, deg);
    RowEliminator span(strand.dim(i), field);
    for (auto& row : strand.boundary_rows(i + 1, field)) span.add_row(std::move(row));
    for (const auto& zp : cycles) {
      if (!span.add_row(strand.coordinates_of(zp, i, field)))
        report.witness_failures.push_back("polarized class is dependent modulo boundaries");
    }
  }
  report.pass = report.witness_failures.empty();
  return report;
}

}  // namespace kz
