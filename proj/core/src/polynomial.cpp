#include "polycrit/polynomial.hpp"

namespace polycrit {

Polynomial<Rat> substitute_linear(const Polynomial<Rat>& f,
                                  const std::vector<std::vector<Rat>>& A,
                                  const std::vector<Rat>& b, const RingPtr& new_ring) {
  std::size_t n = f.ring()->size();
  std::size_t m = new_ring->size();
  if (A.size() != n || b.size() != n) {
    throw std::invalid_argument("substitute_linear: row count does not match source ring");
  }
  for (const auto& row : A) {
    if (row.size() != m) {
      throw std::invalid_argument("substitute_linear: column count does not match target ring");
    }
  }

  // Images of the source variables as affine-linear polynomials.
  std::vector<Polynomial<Rat>> image;
  image.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial<Rat> li(new_ring);
    for (std::size_t j = 0; j < m; ++j) li.add_term(Monomial::var(m, j), A[i][j]);
    li.add_term(Monomial::unit(m), b[i]);
    image.push_back(std::move(li));
  }

  Polynomial<Rat> result(new_ring);
  for (const auto& [mono, coef] : f.terms()) {
    Polynomial<Rat> term = Polynomial<Rat>::constant(new_ring, coef);
    for (std::size_t v = 0; v < n; ++v) {
      if (mono.e[v] != 0) term *= image[v].pow(mono.e[v]);
    }
    result += term;
  }
  return result;
}

}  // namespace polycrit
