// Polynomial systems and matrices: Jacobians, determinants and minors.
// Determinants expand by minors up to 4x4; larger exact matrices use
// fraction-free (Bareiss) elimination so intermediate entries stay divisible.
#pragma once

#include <vector>

#include "polycrit/polynomial.hpp"

namespace polycrit {

template <class K>
struct PolySystem {
  RingPtr ring;
  std::vector<Polynomial<K>> polys;

  PolySystem() = default;
  explicit PolySystem(RingPtr r) : ring(std::move(r)) {}
  PolySystem(RingPtr r, std::vector<Polynomial<K>> ps) : ring(std::move(r)), polys(std::move(ps)) {
    validate();
  }

  std::size_t size() const { return polys.size(); }

  void push_back(Polynomial<K> p) {
    if (!same_ring(p.ring(), ring)) throw std::invalid_argument("system ring mismatch");
    polys.push_back(std::move(p));
  }

  void validate() const {
    if (!ring) throw std::logic_error("system has no ring");
    for (const auto& p : polys) {
      if (!same_ring(p.ring(), ring)) throw std::invalid_argument("system ring mismatch");
    }
  }

  std::vector<int> degrees() const {
    std::vector<int> d;
    d.reserve(polys.size());
    for (const auto& p : polys) d.push_back(p.total_degree());
    return d;
  }

  std::vector<CD> evaluate(std::span<const CD> point) const {
    std::vector<CD> v;
    v.reserve(polys.size());
    for (const auto& p : polys) v.push_back(p.evaluate(point));
    return v;
  }
};

inline PolySystem<CD> to_complex(const PolySystem<Rat>& s) {
  PolySystem<CD> r(s.ring);
  r.polys.reserve(s.polys.size());
  for (const auto& p : s.polys) r.polys.push_back(to_complex(p));
  return r;
}

template <class K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        a_(rows * cols, Polynomial<K>(ring_)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial<K>& at(std::size_t i, std::size_t j) {
    bounds(i, j);
    return a_[i * cols_ + j];
  }
  const Polynomial<K>& at(std::size_t i, std::size_t j) const {
    bounds(i, j);
    return a_[i * cols_ + j];
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
    PolyMatrix s(ring_, ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i) {
      for (std::size_t j = 0; j < ci.size(); ++j) s.at(i, j) = at(ri[i], ci[j]);
    }
    return s;
  }

  Polynomial<K> det() const {
    require_square();
    if (rows_ <= 4) return det_laplace();
    if constexpr (std::same_as<K, Rat>) {
      return det_bareiss();
    } else {
      return det_laplace();
    }
  }

  Polynomial<K> det_laplace() const {
    require_square();
    return laplace_rec(identity_indices(rows_), identity_indices(cols_));
  }

  Polynomial<Rat> det_bareiss() const
    requires std::same_as<K, Rat>
  {
    require_square();
    std::size_t n = rows_;
    if (n == 0) return Polynomial<Rat>::constant(ring_, Rat(1));
    std::vector<Polynomial<Rat>> m = a_;
    auto entry = [&](std::size_t i, std::size_t j) -> Polynomial<Rat>& { return m[i * n + j]; };
    Polynomial<Rat> prev = Polynomial<Rat>::constant(ring_, Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (entry(k, k).is_zero()) {
        std::size_t pivot = k;
        while (pivot < n && entry(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return Polynomial<Rat>::zero(ring_);
        for (std::size_t j = 0; j < n; ++j) std::swap(entry(k, j), entry(pivot, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          Polynomial<Rat> num = entry(i, j) * entry(k, k) - entry(i, k) * entry(k, j);
          entry(i, j) = divide_exact(num, prev);
        }
      }
      for (std::size_t i = k + 1; i < n; ++i) entry(i, k) = Polynomial<Rat>::zero(ring_);
      prev = entry(k, k);
    }
    Polynomial<Rat> d = entry(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d;
  }

  // All size x size minors, ordered lexicographically by the (row tuple,
  // column tuple) index pair with rows varying slowest.
  PolySystem<K> minors(std::size_t size) const {
    if (size == 0 || size > rows_ || size > cols_) {
      throw std::invalid_argument("minor size out of range");
    }
    PolySystem<K> out(ring_);
    std::vector<std::size_t> ri = first_combination(size);
    do {
      std::vector<std::size_t> ci = first_combination(size);
      do {
        out.polys.push_back(submatrix(ri, ci).det());
      } while (next_combination(ci, cols_));
    } while (next_combination(ri, rows_));
    return out;
  }

 private:
  void bounds(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }

  void require_square() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  }

  static std::vector<std::size_t> identity_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
  }

  static std::vector<std::size_t> first_combination(std::size_t size) {
    return identity_indices(size);
  }

  static bool next_combination(std::vector<std::size_t>& c, std::size_t limit) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] + (k - i) < limit) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  Polynomial<K> laplace_rec(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
    std::size_t n = ri.size();
    if (n == 0) return Polynomial<K>::constant(ring_, K(1));
    if (n == 1) return at(ri[0], ci[0]);
    Polynomial<K> acc(ring_);
    std::vector<std::size_t> subr(ri.begin() + 1, ri.end());
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial<K>& e = at(ri[0], ci[j]);
      if (e.is_zero()) continue;
      std::vector<std::size_t> subc;
      subc.reserve(n - 1);
      for (std::size_t l = 0; l < n; ++l) {
        if (l != j) subc.push_back(ci[l]);
      }
      Polynomial<K> term = e * laplace_rec(subr, subc);
      if (j % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  }

  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial<K>> a_;
};

// Jacobian of a system: row i holds the partials of polys[i].
template <class K>
PolyMatrix<K> jacobian(const PolySystem<K>& f) {
  f.validate();
  std::size_t n = f.ring->size();
  PolyMatrix<K> j(f.ring, f.size(), n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t v = 0; v < n; ++v) j.at(i, v) = f.polys[i].differentiate(v);
  }
  return j;
}

}  // namespace polycrit
