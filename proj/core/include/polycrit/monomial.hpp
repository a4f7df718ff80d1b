// Exponent vectors with the graded reverse lexicographic order. All term
// maps in the library iterate in descending grevlex order, which fixes the
// canonical printing and iteration order everywhere.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polycrit {

struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  static Monomial unit(std::size_t nvars) { return Monomial(nvars); }

  static Monomial var(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.e.at(index) = power;
    return m;
  }

  std::size_t nvars() const { return e.size(); }

  unsigned total_degree() const {
    return std::accumulate(e.begin(), e.end(), 0u);
  }

  bool is_constant() const { return total_degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > other.e[i]) return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += other.e[i];
    return r;
  }

  // Exact quotient; caller must have checked divisibility.
  Monomial operator/(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (other.e[i] > r.e[i]) throw std::domain_error("monomial quotient is not integral");
      r.e[i] -= other.e[i];
    }
    return r;
  }

  bool operator==(const Monomial& other) const { return e == other.e; }
  bool operator!=(const Monomial& other) const { return e != other.e; }
};

// a < b in grevlex: smaller total degree, or on ties the *last* differing
// exponent of a is larger.
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

// Comparator putting the grevlex-largest monomial first, so that map
// iteration starts at the leading term.
struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_less(b, a);
  }
};

}  // namespace polycrit
