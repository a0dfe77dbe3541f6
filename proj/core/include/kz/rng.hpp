#pragma once

#include <cstdint>

namespace kz {

/// splitmix64: tiny deterministic generator. Used instead of <random>
/// distributions so that seeded suites produce identical streams on every
/// platform and standard library.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, n), n >= 1
  uint64_t below(uint64_t n) {
    // multiply-shift; bias is negligible for the small n used here, but
    // rejection keeps it exact
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// uniform in [lo, hi] inclusive
  int64_t between(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1; }

private:
  uint64_t state_;
};

}  // namespace kz
