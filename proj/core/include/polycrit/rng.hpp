// Seeded randomness wrapper. Every stochastic choice in the library draws
// from this class so a run is reproducible from its 64-bit seed alone.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

#include "polycrit/rational.hpp"

namespace polycrit {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [lo, hi], inclusive, rejection-sampled to stay
  // unbiased and platform-independent (mt19937_64 output is standardized).
  long long uniform_int(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(next());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return lo + static_cast<long long>(v % span);
  }

  // Integer-valued rational in [lo, hi].
  Rat rat_int(long long lo, long long hi) {
    return Rat(static_cast<long>(uniform_int(lo, hi)));
  }

  // Nonzero integer-valued rational in [lo, hi].
  Rat rat_int_nonzero(long long lo, long long hi) {
    Rat r = rat_int(lo, hi);
    while (is_zero(r)) r = rat_int(lo, hi);
    return r;
  }

  // Point on the unit circle.
  CD unit_complex() {
    double th = 2.0 * std::numbers::pi * unit();
    return CD(std::cos(th), std::sin(th));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace polycrit
