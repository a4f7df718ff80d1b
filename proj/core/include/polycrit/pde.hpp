// Linear constant-coefficient PDE viewed through polynomial algebra. An
// ideal or module of polynomials in x acts on functions of z by reading
// each variable x_v as the derivative d/dz_v. This header provides the
// function class closed under that action, differential operators with
// polynomial coefficients, and the membership and solution checks built
// from them.
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "polycrit/linalg_exact.hpp"
#include "polycrit/poly_matrix.hpp"
#include "polycrit/polynomial.hpp"
#include "polycrit/rational.hpp"
#include "polycrit/ring.hpp"

namespace polycrit {

// True when exp(a . z) solves every PDE in the system, which happens
// exactly when all generators vanish at a.
bool is_exponential_solution(const PolySystem<Rat>& system, std::span<const Rat> a);

// Floating-point variant; a generator counts as vanishing when its value
// at a has absolute value below tol.
bool is_exponential_solution(const PolySystem<Rat>& system, std::span<const CD> a,
                             double tol = 1e-10);

// Differential operator sum_m c_m(x) * d^m acting on polynomials in the
// same ring. Coefficients stay on the left: each term computes
// c_m(x) * (d^m f), never d^m (c_m f).
struct DiffOp {
  RingPtr ring;
  std::map<Monomial, Polynomial<Rat>, GrevlexDescending> terms;

  DiffOp() = default;
  explicit DiffOp(RingPtr r) : ring(std::move(r)) {}

  static DiffOp identity(RingPtr ring);
  static DiffOp partial(RingPtr ring, std::size_t var);

  void add_term(const Monomial& partial, Polynomial<Rat> coeff);
};

// Reads a multiplier polynomial in 2n variables (x_1..x_n followed by the
// same count of derivative symbols) as an operator: the trailing block of
// each monomial becomes the derivative order, the leading block its
// coefficient in xring.
DiffOp diffop_from_multiplier(const Polynomial<Rat>& b, const RingPtr& xring);

Polynomial<Rat> apply_diffop(const DiffOp& op, const Polynomial<Rat>& f);

// Prime ideal generated by a subset of the variables; an empty subset is
// the zero ideal.
struct LinearPrime {
  std::vector<std::size_t> vanishing;

  static LinearPrime zero_ideal() { return {}; }
  static LinearPrime coordinates(std::vector<std::size_t> indices) {
    return {std::move(indices)};
  }

  // Membership after setting the vanishing variables to zero; for the zero
  // ideal the polynomial itself must vanish.
  bool contains(const Polynomial<Rat>& f) const;
};

// Ideal membership through differential conditions: f belongs to the ideal
// exactly when every operator applied to f lands in its paired prime.
bool membership(const std::vector<std::pair<DiffOp, LinearPrime>>& conditions,
                const Polynomial<Rat>& f);

// Finite sum  sum_j p_j(z) exp(a_j . z)  with rational frequency vectors.
// The class is closed under differentiation and under constant-coefficient
// operators, and zero testing is exact: distinct exponentials are linearly
// independent over polynomials, so the sum vanishes identically exactly
// when every grouped coefficient polynomial is zero.
class ExpPolyFunction {
 public:
  using Terms = std::map<std::vector<Rat>, Polynomial<Rat>>;

  ExpPolyFunction() = default;  // ringless; only valid as an assignment target
  static ExpPolyFunction zero(RingPtr ring);
  static ExpPolyFunction polynomial(Polynomial<Rat> p);
  static ExpPolyFunction wave(Polynomial<Rat> p, std::vector<Rat> frequency);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExpPolyFunction& operator+=(const ExpPolyFunction& other);
  ExpPolyFunction& operator-=(const ExpPolyFunction& other);
  ExpPolyFunction operator+(const ExpPolyFunction& other) const;
  ExpPolyFunction operator-(const ExpPolyFunction& other) const;
  ExpPolyFunction operator*(const Rat& scalar) const;

  ExpPolyFunction differentiate(std::size_t var) const;

  bool operator==(const ExpPolyFunction& other) const;
  bool operator!=(const ExpPolyFunction& other) const { return !(*this == other); }

 private:
  void add_wave(const std::vector<Rat>& frequency, const Polynomial<Rat>& p);

  RingPtr ring_;
  Terms terms_;
};

// g(d) applied to f, where each monomial x^e of g differentiates e times.
// The variable counts of the two rings must agree; names may differ.
Polynomial<Rat> apply_poly_diffop(const Polynomial<Rat>& g, const Polynomial<Rat>& f);
ExpPolyFunction apply_poly_diffop(const Polynomial<Rat>& g, const ExpPolyFunction& f);

// System of linear constant-coefficient PDE for functions with k
// components: each generator row g acts as sum_j g_j(d) applied to phi_j.
struct PDEModule {
  RingPtr ring;
  std::size_t k = 1;
  std::vector<std::vector<Polynomial<Rat>>> generators;

  void validate() const;
};

ExpPolyFunction apply_module_generator(const std::vector<Polynomial<Rat>>& g,
                                       const std::vector<ExpPolyFunction>& phi);

bool is_module_solution(const PDEModule& m, const std::vector<ExpPolyFunction>& phi);

// Builds phi(z) = xi(z3) + z2 psi(z3) + z1 psi'(z3) + alpha z1 z2 + beta z1
// from univariate xi and psi, and checks it against the PDE triple
// d1^2 phi = d2^2 phi = (d1 d3 - d2 d3^2) phi = 0.
bool verify_havetheform(const Polynomial<Rat>& xi, const Polynomial<Rat>& psi,
                        const Rat& alpha, const Rat& beta);

// 4x4 matrix with constant antidiagonals read from a vector of length 7.
RatMatrix hankel_matrix(const std::vector<Rat>& u);

// The first-order system on 7 components whose generators are the four
// length-4 windows of the coefficient vector: row r has x_1..x_4 in
// positions r..r+3 and zeros elsewhere.
PDEModule hankel_module();

// Wave solution phi(z) = psi(l_1, .., l_r) * u, where the l_i are the
// linear forms read from an exact kernel basis of hankel_matrix(u) and psi
// is a polynomial in r variables. Throws when the matrix is invertible.
std::vector<ExpPolyFunction> build_wave_solution(const std::vector<Rat>& u,
                                                 const Polynomial<Rat>& psi);

}  // namespace polycrit
