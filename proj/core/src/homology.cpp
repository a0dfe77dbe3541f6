#include "kz/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "kz/errors.hpp"

namespace kz {

int strand_homology_rank(const CoefficientModule& module, const Monomial& degree, int i,
                         const PrimeField& field) {
  Strand strand(module, degree);
  return strand.homology_dim(i, field);
}

std::vector<int> total_homology_dims(const CoefficientModule& module, const PrimeField& field,
                                     uint64_t lattice_cap) {
  std::vector<int> dims(static_cast<size_t>(module.nvars()) + 1, 0);
  for (const auto& a : lcm_lattice(module.ideal(), lattice_cap)) {
    Strand strand(module, a);
    std::vector<int> h = strand.homology_dims(field);
    for (size_t i = 0; i < h.size(); ++i) dims[i] += h[i];
  }
  return dims;
}

std::map<Monomial, int> homology_dims_by_degree(const CoefficientModule& module, int i,
                                                const std::vector<Monomial>& candidates,
                                                const PrimeField& field) {
  std::map<Monomial, int> out;
  for (const auto& a : candidates) {
    Strand strand(module, a);
    int h = strand.homology_dim(i, field);
    if (h != 0) out.emplace(a, h);
  }
  return out;
}

namespace {

/// Examines one candidate degree of the quotient strand scan and returns the
/// top level with nonzero homology that strictly exceeds `floor`, or -1.
/// Levels above min(support, dividing generators) cannot carry homology (a
/// Taylor-complex strand at the degree has no chains there), which both
/// bounds the scan and skips shallow candidates entirely.
int strand_top_above(const CoefficientModule& module, const Monomial& a, int floor,
                     const PrimeField& field) {
  Strand strand(module, a);
  int s = strand.support_size();
  int jstart = std::min(s, strand.dividing_generators());
  if (jstart <= floor) return -1;
  int rank_above = strand.boundary_rank(jstart + 1, field);
  for (int j = jstart; j > floor; --j) {
    int d = strand.dim(j);
    if (d == 0) {
      rank_above = 0;
      continue;
    }
    int r = strand.boundary_rank(j, field);
    if (d - r - rank_above > 0) return j;
    rank_above = r;
  }
  return -1;
}

}  // namespace

DepthResult depth(const MonomialIdeal& ideal, const DepthOptions& options) {
  if (ideal.is_unit()) throw std::invalid_argument("depth: the unit ideal has no quotient depth");
  const int nvars = ideal.nvars();
  CoefficientModule module = CoefficientModule::quotient_module(ideal);

  DepthResult result;
  result.projective_dimension = 0;  // H_0 at the unit degree is always K
  result.witness = Monomial::unit(nvars);

  auto scan_candidate = [&](const Monomial& a) {
    if (a.is_unit()) return;
    ++result.strands_scanned;
    // quick skips before any strand work
    int s = 0;
    for (int v = 0; v < nvars; ++v)
      if (a.exponent(v) > 0) ++s;
    if (s <= result.projective_dimension) return;
    int top = strand_top_above(module, a, result.projective_dimension, options.field);
    if (top > result.projective_dimension) {
      result.projective_dimension = top;
      result.witness = a;
    }
  };

  bool streamed = false;
  if (options.candidates != CandidateMode::BoxStream) {
    try {
      std::vector<Monomial> lattice = lcm_lattice(ideal, options.lattice_cap);
      // deepest first: raises the floor early so later strands exit fast
      std::sort(lattice.begin(), lattice.end(), [](const Monomial& x, const Monomial& y) {
        int dx = x.total_degree(), dy = y.total_degree();
        if (dx != dy) return dx > dy;
        return x < y;
      });
      for (const auto& a : lattice) scan_candidate(a);
    } catch (const capacity_error&) {
      if (options.candidates == CandidateMode::Lattice) throw;
      streamed = true;
    }
  } else {
    streamed = true;
  }

  if (streamed) {
    result.used_fallback = true;
    for_each_exponent_box_candidate(ideal, [&](const Monomial& a) {
      // homology is supported on the lcm closure; skip the rest of the box
      if (is_lcm_of_generators(ideal, a)) scan_candidate(a);
      return true;
    });
  }

  result.depth = nvars - result.projective_dimension;
  return result;
}

bool homology_class_nonzero(const KoszulElement& z, const PrimeField& field) {
  if (z.is_zero()) return false;
  if (!z.is_cycle()) throw std::invalid_argument("homology_class_nonzero: element is not a cycle");
  Monomial a = *z.multidegree();
  int i = z.homological_degree();
  Strand strand(z.module(), a);
  std::vector<uint32_t> v = strand.coordinates_of(z, i, field);
  RowEliminator boundaries(strand.dim(i), field);
  for (auto& row : strand.boundary_rows(i + 1, field)) boundaries.add_row(std::move(row));
  return !boundaries.in_span(std::move(v));
}

std::vector<KoszulElement> homology_basis_cycles(const MonomialIdeal& ideal, int i,
                                                 const PrimeField& field, uint64_t lattice_cap) {
  CoefficientModule module = CoefficientModule::ideal_module(ideal);
  std::vector<KoszulElement> out;
  for (const auto& a : lcm_lattice(ideal, lattice_cap)) {
    Strand strand(module, a);
    int d = strand.dim(i);
    if (d == 0) continue;
    // cycle space: left kernel of the outgoing boundary
    std::vector<std::vector<uint32_t>> kernel;
    if (strand.dim(i - 1) == 0) {
      kernel.reserve(static_cast<size_t>(d));
      for (int t = 0; t < d; ++t) {
        std::vector<uint32_t> e(static_cast<size_t>(d), 0);
        e[static_cast<size_t>(t)] = 1;
        kernel.push_back(std::move(e));
      }
    } else {
      kernel = left_kernel(strand.boundary_rows(i, field), strand.dim(i - 1), field);
    }
    if (kernel.empty()) continue;
    RowEliminator span(d, field);
    for (auto& row : strand.boundary_rows(i + 1, field)) span.add_row(std::move(row));
    for (auto& kv : kernel) {
      std::vector<uint32_t> reduced = kv;
      span.reduce(reduced);
      bool nonzero = false;
      for (uint32_t v : reduced)
        if (v) {
          nonzero = true;
          break;
        }
      if (!nonzero) continue;
      // normalize the representative on its leading entry
      uint32_t lead = 0;
      for (uint32_t v : reduced)
        if (v) {
          lead = v;
          break;
        }
      uint32_t inv = field.inv(lead);
      for (auto& v : reduced) v = field.mul(v, inv);
      out.push_back(strand.element_of(reduced, i, field));
      span.add_row(std::move(reduced));
    }
  }
  return out;
}

}  // namespace kz
