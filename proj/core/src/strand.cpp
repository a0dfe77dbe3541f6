#include "kz/strand.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kz/errors.hpp"

namespace kz {

Strand::Strand(const CoefficientModule& module, const Monomial& degree)
    : module_(module), degree_(degree) {
  if (degree.nvars() != module.nvars())
    throw space_mismatch_error("Strand: degree does not match the module's variable space");
  supp_ = degree.support();
  int s = static_cast<int>(supp_.size());
  if (s > 24) throw capacity_error("Strand: support larger than 24 variables");
  size_t size = size_t(1) << s;
  in_ideal_.assign(size, 0);

  // membership of u_M = x^(a - 1_M) in the module ideal, via the tight-set
  // trick: a generator g <= a certifies u_M in I exactly when M avoids the
  // coordinates where g meets a. Superset-closure DP gives all subsets.
  const auto& gens = module_.ideal().generators();
  std::vector<char> seeded(size, 0);
  for (const auto& g : gens) {
    bool divides = true;
    for (int v = 0; v < degree.nvars(); ++v)
      if (g.exponent(v) > degree.exponent(v)) {
        divides = false;
        break;
      }
    if (!divides) continue;
    ++dividing_;
    uint32_t tight = 0;
    for (int t = 0; t < s; ++t)
      if (g.exponent(supp_[static_cast<size_t>(t)]) == degree.exponent(supp_[static_cast<size_t>(t)]))
        tight |= uint32_t(1) << t;
    seeded[tight] = 1;
  }
  // good[C] = some tight set is contained in C
  for (int t = 0; t < s; ++t) {
    uint32_t bit = uint32_t(1) << t;
    for (uint32_t c = 0; c < size; ++c)
      if (c & bit) seeded[c] = static_cast<char>(seeded[c] | seeded[c ^ bit]);
  }
  uint32_t full = static_cast<uint32_t>(size - 1);
  for (uint32_t m = 0; m < size; ++m) in_ideal_[m] = seeded[full ^ m];

  levels_.resize(static_cast<size_t>(s) + 1);
  level_built_.assign(static_cast<size_t>(s) + 1, 0);
}

bool Strand::admitted(uint32_t mask) const {
  switch (module_.kind()) {
    case ModuleKind::Free: return true;
    case ModuleKind::Ideal: return in_ideal_[mask];
    case ModuleKind::Quotient: return !in_ideal_[mask];
  }
  return false;
}

void Strand::build_level(int i) const {
  if (level_built_[static_cast<size_t>(i)]) return;
  int s = support_size();
  auto& lvl = levels_[static_cast<size_t>(i)];
  lvl.clear();
  // enumerate masks of popcount i
  if (i == 0) {
    if (admitted(0)) lvl.push_back(0);
  } else if (i <= s) {
    uint32_t mask = (uint32_t(1) << i) - 1;
    uint32_t limit = uint32_t(1) << s;
    while (mask < limit) {
      if (admitted(mask)) lvl.push_back(mask);
      // next subset of the same popcount (Gosper)
      uint32_t c = mask & (~mask + 1);
      uint32_t r = mask + c;
      if (r >= limit) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  std::sort(lvl.begin(), lvl.end(), mask_less);
  level_built_[static_cast<size_t>(i)] = 1;
}

int Strand::dim(int i) const {
  if (i < 0 || i > support_size()) return 0;
  build_level(i);
  return static_cast<int>(levels_[static_cast<size_t>(i)].size());
}

const std::vector<uint32_t>& Strand::basis(int i) const {
  if (i < 0 || i > support_size()) {
    static const std::vector<uint32_t> empty;
    return empty;
  }
  build_level(i);
  return levels_[static_cast<size_t>(i)];
}

int Strand::basis_index(int i, uint32_t mask) const {
  const auto& lvl = basis(i);
  auto it = std::lower_bound(lvl.begin(), lvl.end(), mask, mask_less);
  if (it == lvl.end() || *it != mask) return -1;
  return static_cast<int>(it - lvl.begin());
}

std::vector<std::vector<uint32_t>> Strand::boundary_rows(int i, const PrimeField& field) const {
  std::vector<std::vector<uint32_t>> rows;
  const auto& src = basis(i);
  const auto& dst = basis(i - 1);
  rows.reserve(src.size());
  uint32_t one = 1, minus = field.p() - 1;
  for (uint32_t m : src) {
    std::vector<uint32_t> row(dst.size(), 0);
    uint32_t scan = m;
    int t = 0;
    while (scan) {
      int bit = std::countr_zero(scan);
      scan &= scan - 1;
      ++t;
      uint32_t smaller = m & ~(uint32_t(1) << bit);
      int idx = basis_index(i - 1, smaller);
      if (idx >= 0) row[static_cast<size_t>(idx)] = (t % 2 == 1) ? one : minus;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int Strand::boundary_rank(int i, const PrimeField& field) const {
  if (dim(i) == 0 || dim(i - 1) == 0) return 0;
  return rank_of_rows(boundary_rows(i, field), dim(i - 1), field);
}

int Strand::homology_dim(int i, const PrimeField& field) const {
  int d = dim(i);
  if (d == 0) return 0;
  return d - boundary_rank(i, field) - boundary_rank(i + 1, field);
}

std::vector<int> Strand::homology_dims(const PrimeField& field) const {
  int s = support_size();
  std::vector<int> h(static_cast<size_t>(s) + 1, 0);
  int rank_above = 0;  // rank of the boundary out of level i+1
  for (int i = s; i >= 0; --i) {
    int r = boundary_rank(i, field);
    h[static_cast<size_t>(i)] = dim(i) - r - rank_above;
    rank_above = r;
  }
  return h;
}

Monomial Strand::coefficient_monomial(uint32_t mask) const {
  std::vector<int> e = degree_.exponents();
  uint32_t scan = mask;
  while (scan) {
    int t = std::countr_zero(scan);
    scan &= scan - 1;
    --e[static_cast<size_t>(supp_[static_cast<size_t>(t)])];
  }
  return Monomial(std::move(e));
}

uint64_t Strand::variable_mask(uint32_t mask) const {
  uint64_t out = 0;
  uint32_t scan = mask;
  while (scan) {
    int t = std::countr_zero(scan);
    scan &= scan - 1;
    out |= uint64_t(1) << supp_[static_cast<size_t>(t)];
  }
  return out;
}

std::vector<uint32_t> Strand::coordinates_of(const KoszulElement& z, int level,
                                             const PrimeField& field) const {
  std::vector<uint32_t> v(static_cast<size_t>(dim(level)), 0);
  for (const auto& [key, c] : z.terms()) {
    // translate the variable mask into a support mask
    uint32_t mask = 0;
    uint64_t rest = key.jmask;
    for (int t = 0; t < support_size(); ++t) {
      uint64_t bit = uint64_t(1) << supp_[static_cast<size_t>(t)];
      if (rest & bit) {
        mask |= uint32_t(1) << t;
        rest &= ~bit;
      }
    }
    if (rest != 0) throw std::invalid_argument("Strand::coordinates_of: term outside the support");
    if (KoszulElement::term_multidegree(key.u, key.jmask) != degree_)
      throw std::invalid_argument("Strand::coordinates_of: term of a different multidegree");
    int idx = basis_index(level, mask);
    if (idx < 0) throw std::invalid_argument("Strand::coordinates_of: term is not a basis element");
    v[static_cast<size_t>(idx)] = field.add(v[static_cast<size_t>(idx)], field.reduce(c));
  }
  return v;
}

KoszulElement Strand::element_of(const std::vector<uint32_t>& coords, int level,
                                 const PrimeField& field) const {
  const auto& lvl = basis(level);
  if (coords.size() != lvl.size()) throw std::invalid_argument("Strand::element_of: bad width");
  KoszulElement z(module_);
  for (size_t t = 0; t < lvl.size(); ++t) {
    uint32_t c = coords[t];
    if (!c) continue;
    int64_t lifted = (c <= field.p() / 2) ? static_cast<int64_t>(c)
                                          : static_cast<int64_t>(c) - static_cast<int64_t>(field.p());
    z.add_term(coefficient_monomial(lvl[t]), variable_mask(lvl[t]), lifted);
  }
  return z;
}

}  // namespace kz
