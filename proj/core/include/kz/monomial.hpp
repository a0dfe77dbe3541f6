#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kz {

/// A monomial as an exponent vector. The length must match the ambient
/// VariableSpace; monomials do not carry the space themselves. The all-zero
/// vector is the unit monomial.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial unit(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }
  static Monomial variable(int nvars, int var, int power = 1);

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int var) const { return e_[static_cast<size_t>(var)]; }
  const std::vector<int>& exponents() const { return e_; }

  int total_degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  /// bitmask of variables with positive exponent; requires nvars <= 64
  uint64_t support_mask() const;
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// exact division; throws when not divisible
  Monomial operator/(const Monomial& other) const;

  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return e_ == other.e_; }
  bool operator!=(const Monomial& other) const { return e_ != other.e_; }
  /// ascending lexicographic order on exponent vectors; the canonical order
  /// used everywhere outputs need to be deterministic
  bool operator<(const Monomial& other) const;

  size_t hash() const;

private:
  std::vector<int> e_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

}  // namespace kz
