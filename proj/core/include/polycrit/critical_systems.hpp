// Builders that turn a model (variety plus data) into the square polynomial
// system whose solutions are its critical points: Euclidean distance,
// linear sections, Gaussian and discrete likelihood, and scattering charts.
#pragma once

#include <map>
#include <string>

#include "polycrit/linalg_exact.hpp"
#include "polycrit/rng.hpp"
#include "polycrit/square_system.hpp"

namespace polycrit {

// A variety in affine space: generators over the ambient ring plus its
// codimension. The builders here require a complete intersection, i.e. as
// many generators as the codimension.
struct ModelSpec {
  PolySystem<Rat> generators;
  int codim = 0;

  const RingPtr& ring() const { return generators.ring; }
  void validate() const;
};

// Critical points of the squared distance from u to the model. Hypersurfaces
// in the plane use the two-equation form with the multiplier eliminated;
// otherwise one multiplier per generator is appended to the ring.
SquareSystem build_ed_system(const ModelSpec& model, const std::vector<Rat>& u);

// Critical points of a random linear functional on the intersection of the
// model with a random affine-linear space of codimension section - 1. For a
// surface in 3-space the counts over section = 1,2,3 are its polar degrees.
SquareSystem build_linear_section_system(const ModelSpec& model, int section, SeededRng& rng);

// A linear space of symmetric n x n matrices spanned by `basis`.
struct SymmetricMatrixSpace {
  int n = 0;
  std::vector<RatMatrix> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  // Checks symmetry, exact linear independence, and that a random element
  // of the span is invertible.
  void validate() const;
};

// Basis matrices with uniform integer entries in [-9, 9].
SymmetricMatrixSpace random_symmetric_space(int n, int k, SeededRng& rng);

// S = (1/N) G G^T for a random integer n x N matrix G, N = n + 2; positive
// definite with probability one.
RatMatrix random_sample_covariance(int n, SeededRng& rng);

// Likelihood equations for the concentration model K in the span: KS = Id
// symmetrized plus trace((S - sample) A_i) = 0. The dropped antisymmetric
// entries of KS - Id become consistency conditions checked at endpoints.
SquareSystem build_gaussian_concentration(const SymmetricMatrixSpace& space, const RatMatrix& sample);

// Likelihood equations for the covariance model S in the span: KS = Id
// symmetrized plus trace((K*sample*K - K) A_i) = 0.
SquareSystem build_gaussian_covariance(const SymmetricMatrixSpace& space, const RatMatrix& sample);

// Critical points of prod p_j^{u_j} on the model inside the probability
// simplex: multipliers cleared to u_j = p_j (y_0 + sum_i y_i df_i/dp_j),
// with sum p_j = 1 and every p_j nonvanishing.
SquareSystem build_discrete_mle(const ModelSpec& model, const std::vector<Rat>& counts);

// Exact maximizer of the independence model on 2x2 tables, counts row-major.
std::vector<Rat> closed_form_mle_independence(const std::vector<Rat>& counts);

// Exact maximizer on the coin model V(p0 p2 - (p0 + p1) p1) in the
// 2-simplex for counts (u0, u1, u2).
std::vector<Rat> closed_form_mle_coin(const std::vector<Rat>& counts);

// The k x m chart matrix of the (k,m) scattering moduli space: an
// antidiagonal sign block, a column of ones, and unknowns x_{i,j}; its
// nonconstant k x k minors are the chart coordinates p_I.
struct ScatteringChart {
  int k = 0, m = 0;
  RingPtr ring;
  PolyMatrix<Rat> matrix;
  std::vector<std::string> labels;             // "p" + column indices
  std::vector<Polynomial<Rat>> coords;         // nonconstant minors, label-aligned
};

ScatteringChart build_cegm_chart(int k, int m);

// Positive integer weights for every nonconstant chart coordinate.
std::map<std::string, Rat> random_cegm_weights(const ScatteringChart& chart, SeededRng& rng);

// Scattering equations: for each unknown, the cleared derivative of
// sum_I u_I log p_I. All nonconstant p_I are nonvanishing conditions.
SquareSystem build_cegm_scattering(int k, int m, const std::map<std::string, Rat>& weights);

// Dense polynomial with all monomials of total degree <= degree and uniform
// integer coefficients in [-9, 9]; the top-degree part is kept nonzero.
Polynomial<Rat> random_dense_poly(const RingPtr& ring, int degree, SeededRng& rng);

// Widens a polynomial into a larger ring; var_map[i] is the index in `big`
// of source variable i.
Polynomial<Rat> embed(const Polynomial<Rat>& p, const RingPtr& big,
                      const std::vector<std::size_t>& var_map);

}  // namespace polycrit
