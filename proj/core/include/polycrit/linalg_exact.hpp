// Exact rational linear algebra on small dense matrices: rank, kernel and
// determinant via Gaussian elimination without any floating point.
#pragma once

#include <vector>

#include "polycrit/rational.hpp"

namespace polycrit {

using RatMatrix = std::vector<std::vector<Rat>>;

namespace detail {

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rat factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline int rank_exact(RatMatrix m) {
  return static_cast<int>(detail::rref(m).size());
}

// Basis of the right kernel {v : M v = 0}, one vector per row, ordered by
// ascending free column so the result is deterministic.
inline RatMatrix kernel_basis_exact(RatMatrix m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto pivots = detail::rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rat det_exact(RatMatrix m) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m[pivot][c])) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      det = -det;
    }
    det *= m[c][c];
    Rat inv = 1 / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      Rat factor = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

}  // namespace polycrit
