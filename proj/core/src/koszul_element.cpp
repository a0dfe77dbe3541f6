#include "kz/koszul_element.hpp"

#include <bit>
#include <stdexcept>

namespace kz {

int popcount64(uint64_t m) { return std::popcount(m); }

std::vector<int> mask_to_indices(uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

uint64_t indices_to_mask(const std::vector<int>& idx) {
  uint64_t m = 0;
  for (int i : idx) {
    if (i < 0 || i >= 64) throw std::out_of_range("indices_to_mask: index out of range");
    uint64_t bit = uint64_t(1) << i;
    if (m & bit) throw std::invalid_argument("indices_to_mask: repeated index");
    m |= bit;
  }
  return m;
}

bool KoszulTermKey::operator<(const KoszulTermKey& o) const {
  if (u != o.u) return u < o.u;
  int pa = popcount64(jmask), pb = popcount64(o.jmask);
  if (pa != pb) return pa < pb;
  if (jmask == o.jmask) return false;
  // ascending index lists of equal length compare lexicographically: the set
  // holding the lowest differing bit comes first
  uint64_t diff = jmask ^ o.jmask;
  uint64_t low = diff & (~diff + 1);
  return (jmask & low) != 0;
}

KoszulElement KoszulElement::term(CoefficientModule module, Monomial u, uint64_t jmask, int64_t coeff) {
  KoszulElement z(std::move(module));
  z.add_term(u, jmask, coeff);
  return z;
}

void KoszulElement::add_term(const Monomial& u, uint64_t jmask, int64_t coeff) {
  if (coeff == 0) return;
  if (u.nvars() != module_.nvars())
    throw std::invalid_argument("KoszulElement: coefficient monomial has wrong variable count");
  int n = module_.nvars();
  if (n < 64 && (jmask >> n) != 0)
    throw std::out_of_range("KoszulElement: index set outside the variable space");
  switch (module_.kind()) {
    case ModuleKind::Free:
      break;
    case ModuleKind::Quotient:
      if (module_.ideal().contains(u)) return;  // reduces to zero
      break;
    case ModuleKind::Ideal:
      if (!module_.ideal().contains(u))
        throw std::invalid_argument("KoszulElement: coefficient lies outside the ideal module");
      break;
  }
  KoszulTermKey key{u, jmask};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

KoszulElement KoszulElement::operator+(const KoszulElement& other) const {
  if (module_ != other.module_) throw std::invalid_argument("KoszulElement: adding across modules");
  KoszulElement out = *this;
  for (const auto& [key, c] : other.terms_) out.add_term(key.u, key.jmask, c);
  return out;
}

KoszulElement KoszulElement::operator-() const {
  KoszulElement out(module_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

KoszulElement KoszulElement::scaled(int64_t c) const {
  KoszulElement out(module_);
  if (c == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

int KoszulElement::homological_degree() const {
  if (terms_.empty()) return -1;
  int deg = popcount64(terms_.begin()->first.jmask);
  for (const auto& [key, c] : terms_)
    if (popcount64(key.jmask) != deg)
      throw std::logic_error("KoszulElement: mixed homological degrees");
  return deg;
}

Monomial KoszulElement::term_multidegree(const Monomial& u, uint64_t jmask) {
  std::vector<int> e = u.exponents();
  for (int i : mask_to_indices(jmask)) {
    if (i >= static_cast<int>(e.size()))
      throw std::out_of_range("term_multidegree: index outside the variable space");
    ++e[static_cast<size_t>(i)];
  }
  return Monomial(std::move(e));
}

std::optional<Monomial> KoszulElement::multidegree() const {
  if (terms_.empty()) return std::nullopt;
  Monomial deg = term_multidegree(terms_.begin()->first.u, terms_.begin()->first.jmask);
  for (const auto& [key, c] : terms_)
    if (term_multidegree(key.u, key.jmask) != deg)
      throw std::logic_error("KoszulElement: not multi-homogeneous");
  return deg;
}

namespace {

KoszulElement boundary_impl(const KoszulElement& z, const CoefficientModule& target) {
  KoszulElement out(target);
  int n = target.nvars();
  for (const auto& [key, c] : z.terms()) {
    int t = 0;
    for (int j : mask_to_indices(key.jmask)) {
      ++t;
      Monomial xu = key.u * Monomial::variable(n, j);
      int64_t sign = (t % 2 == 1) ? 1 : -1;
      out.add_term(xu, key.jmask & ~(uint64_t(1) << j), sign * c);
    }
  }
  return out;
}

}  // namespace

KoszulElement KoszulElement::boundary() const { return boundary_impl(*this, module_); }

KoszulElement KoszulElement::boundary_in_free() const {
  return boundary_impl(*this, CoefficientModule::free_module(space()));
}

KoszulElement KoszulElement::cast_to(CoefficientModule target) const {
  if (target.space() != space())
    throw std::invalid_argument("KoszulElement::cast_to: different variable spaces");
  KoszulElement out(std::move(target));
  for (const auto& [key, c] : terms_) out.add_term(key.u, key.jmask, c);
  return out;
}

int wedge_sign(uint64_t amask, uint64_t bmask) {
  // count pairs a > b with a in amask, b in bmask
  int inversions = 0;
  uint64_t scan = amask;
  while (scan) {
    int a = std::countr_zero(scan);
    scan &= scan - 1;
    uint64_t below = (uint64_t(1) << a) - 1;
    inversions += popcount64(bmask & below);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b, const CoefficientModule& target) {
  if (a.space() != b.space() || a.space() != target.space())
    throw std::invalid_argument("wedge: operands live in different variable spaces");
  KoszulElement out(target);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.jmask & kb.jmask) continue;  // repeated basis letter
      int sign = wedge_sign(ka.jmask, kb.jmask);
      out.add_term(ka.u * kb.u, ka.jmask | kb.jmask, ca * cb * sign);
    }
  return out;
}

}  // namespace kz
