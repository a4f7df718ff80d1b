// Sparse multivariate polynomials over exact rationals or complex doubles.
// Terms live in a map ordered by descending grevlex, so iteration always
// starts at the leading term and formatting is canonical.
#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polycrit/monomial.hpp"
#include "polycrit/rational.hpp"
#include "polycrit/ring.hpp"

namespace polycrit {

inline CD coef_to_cd(const Rat& q) { return to_cd(q); }
inline CD coef_to_cd(const CD& z) { return z; }

template <class K>
class Polynomial {
 public:
  using Terms = std::map<Monomial, K, GrevlexDescending>;

  Polynomial() = default;  // ringless; only valid as an assignment target
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) { require_ring(); }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, K value) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial::unit(p.ring_->size()), std::move(value));
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    if (index >= p.ring_->size()) throw std::out_of_range("variable index out of range");
    p.add_term(Monomial::var(p.ring_->size(), index), K(1));
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  // Zero polynomial reports degree 0.
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
  }

  const std::pair<const Monomial, K>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return *terms_.begin();
  }

  void add_term(const Monomial& m, const K& coef) {
    require_ring();
    if (m.nvars() != ring_->size()) throw std::invalid_argument("monomial width does not match ring");
    if (polycrit::is_zero(coef)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, coef);
    } else {
      it->second += coef;
      if (polycrit::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    check_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    check_ring(other);
    for (const auto& [m, c] : other.terms_) {
      K neg = c;
      neg = -neg;
      add_term(m, neg);
    }
    return *this;
  }

  Polynomial operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
  }

  Polynomial operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial operator*(const Polynomial& other) const {
    check_ring(other);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : other.terms_) {
        K prod = ca;
        prod *= cb;
        r.add_term(ma * mb, prod);
      }
    }
    return r;
  }

  Polynomial& operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
  }

  Polynomial& operator*=(const K& scalar) {
    if (polycrit::is_zero(scalar)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
  }

  Polynomial operator*(const K& scalar) const {
    Polynomial r = *this;
    r *= scalar;
    return r;
  }

  Polynomial pow(unsigned n) const {
    require_ring();
    Polynomial result = constant(ring_, K(1));
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  bool operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [m, c] : terms_) {
      if (m != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial differentiate(std::size_t var) const {
    require_ring();
    if (var >= ring_->size()) throw std::out_of_range("differentiation variable out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial dm = m;
      dm.e[var] -= 1;
      K dc = c;
      dc *= K(static_cast<int>(m.e[var]));
      r.add_term(dm, dc);
    }
    return r;
  }

  // Floating-point evaluation. Rational coefficients convert round-to-nearest.
  CD evaluate(std::span<const CD> point) const {
    require_ring();
    if (point.size() != ring_->size()) throw std::invalid_argument("point dimension does not match ring");
    auto pows = power_table<CD>(point);
    CD acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
      CD t = coef_to_cd(c);
      for (std::size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] != 0) t *= pows[v][m.e[v]];
      }
      acc += t;
    }
    return acc;
  }

  // Exact evaluation at a rational point (rational coefficients only).
  Rat evaluate_exact(std::span<const Rat> point) const
    requires std::same_as<K, Rat>
  {
    require_ring();
    if (point.size() != ring_->size()) throw std::invalid_argument("point dimension does not match ring");
    auto pows = power_table<Rat>(point);
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
      Rat t = c;
      for (std::size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] != 0) t *= pows[v][m.e[v]];
      }
      acc += t;
    }
    return acc;
  }

 private:
  void require_ring() const {
    if (!ring_) throw std::logic_error("polynomial has no ring");
  }

  void check_ring(const Polynomial& other) const {
    require_ring();
    if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("polynomial ring mismatch");
  }

  template <class S>
  std::vector<std::vector<S>> power_table(std::span<const S> point) const {
    std::size_t n = ring_->size();
    std::vector<std::uint32_t> maxe(n, 0);
    for (const auto& [m, c] : terms_) {
      for (std::size_t v = 0; v < n; ++v) maxe[v] = std::max(maxe[v], m.e[v]);
    }
    std::vector<std::vector<S>> pows(n);
    for (std::size_t v = 0; v < n; ++v) {
      pows[v].resize(maxe[v] + 1, S(1));
      for (std::uint32_t e = 1; e <= maxe[v]; ++e) pows[v][e] = pows[v][e - 1] * point[v];
    }
    return pows;
  }

  RingPtr ring_;
  Terms terms_;
};

template <class K>
Polynomial<K> operator*(const K& scalar, const Polynomial<K>& p) {
  return p * scalar;
}

inline Polynomial<CD> to_complex(const Polynomial<Rat>& p) {
  Polynomial<CD> r(p.ring());
  for (const auto& [m, c] : p.terms()) r.add_term(m, to_cd(c));
  return r;
}

// Exact quotient f/g in the rational polynomial ring; throws
// std::domain_error when g does not divide f.
inline Polynomial<Rat> divide_exact(const Polynomial<Rat>& f, const Polynomial<Rat>& g) {
  if (!same_ring(f.ring(), g.ring())) throw std::invalid_argument("polynomial ring mismatch");
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial<Rat> quotient(f.ring());
  Polynomial<Rat> rem = f;
  const auto& [gm, gc] = g.leading_term();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!gm.divides(rm)) throw std::domain_error("inexact polynomial division");
    Monomial qm = rm / gm;
    Rat qc = rc / gc;
    Polynomial<Rat> t(f.ring());
    t.add_term(qm, qc);
    quotient += t;
    rem -= t * g;
  }
  return quotient;
}

// Substitutes old variable i by sum_j A[i][j] * new_j + b[i]; the result
// lives in new_ring, whose size must equal the column count of A.
Polynomial<Rat> substitute_linear(const Polynomial<Rat>& f,
                                  const std::vector<std::vector<Rat>>& A,
                                  const std::vector<Rat>& b, const RingPtr& new_ring);

}  // namespace polycrit
