#include "kz/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace kz {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int v : e_)
    if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::variable(int nvars, int var, int power) {
  if (var < 0 || var >= nvars) throw std::out_of_range("Monomial::variable: index out of range");
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(var)] = power;
  return Monomial(std::move(e));
}

int Monomial::total_degree() const {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

bool Monomial::is_unit() const {
  for (int v : e_)
    if (v != 0) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (int v : e_)
    if (v > 1) return false;
  return true;
}

uint64_t Monomial::support_mask() const {
  if (e_.size() > 64) throw std::length_error("Monomial::support_mask: more than 64 variables");
  uint64_t m = 0;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) m |= uint64_t(1) << i;
  return m;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < nvars(); ++i)
    if (e_[static_cast<size_t>(i)] > 0) s.push_back(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (e_.size() != other.e_.size())
    throw std::invalid_argument("Monomial::divides: mixed variable counts");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (e_.size() != other.e_.size())
    throw std::invalid_argument("Monomial::operator*: mixed variable counts");
  std::vector<int> e(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + other.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::domain_error("Monomial::operator/: not divisible");
  std::vector<int> e(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] - other.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& other) const {
  return std::lexicographical_compare(e_.begin(), e_.end(), other.e_.begin(), other.e_.end());
}

size_t Monomial::hash() const {
  uint64_t h = 1469598103934665603ULL;
  for (int v : e_) {
    h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.e_.size() != b.e_.size()) throw std::invalid_argument("gcd: mixed variable counts");
  std::vector<int> e(a.e_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.e_.size() != b.e_.size()) throw std::invalid_argument("lcm: mixed variable counts");
  std::vector<int> e(a.e_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

}  // namespace kz
