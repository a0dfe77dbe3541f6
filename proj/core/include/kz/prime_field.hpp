#pragma once

#include <cstdint>
#include <stdexcept>

namespace kz {

/// Arithmetic in GF(p) for a word-sized prime p. Elements are stored as
/// uint32_t in [0, p). The default prime 32003 keeps all products inside
/// 31 bits, so accumulation in uint64_t never overflows.
class PrimeField {
public:
  static constexpr uint32_t kDefaultPrime = 32003;

  explicit PrimeField(uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
    if (p >= (1u << 16)) {
      // products must fit in uint64 with slack for long dot products
      if (static_cast<uint64_t>(p - 1) * (p - 1) > (UINT64_MAX >> 20))
        throw std::invalid_argument("PrimeField: modulus too large");
    }
  }

  uint32_t p() const { return p_; }

  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % p_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<uint32_t>(acc);
  }
  uint32_t inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: division by zero");
    return pow(a, p_ - 2);
  }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  uint32_t p_;
};

}  // namespace kz
