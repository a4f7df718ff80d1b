#include "polycrit/pde.hpp"

#include <complex>
#include <stdexcept>

namespace polycrit {

bool is_exponential_solution(const PolySystem<Rat>& system, std::span<const Rat> a) {
  system.validate();
  for (const auto& g : system.polys) {
    if (!is_zero(g.evaluate_exact(a))) return false;
  }
  return true;
}

bool is_exponential_solution(const PolySystem<Rat>& system, std::span<const CD> a,
                             double tol) {
  system.validate();
  for (const auto& g : system.polys) {
    if (std::abs(g.evaluate(a)) >= tol) return false;
  }
  return true;
}

DiffOp DiffOp::identity(RingPtr ring) {
  DiffOp op(ring);
  op.add_term(Monomial::unit(ring->size()), Polynomial<Rat>::constant(ring, Rat(1)));
  return op;
}

DiffOp DiffOp::partial(RingPtr ring, std::size_t var) {
  DiffOp op(ring);
  op.add_term(Monomial::var(ring->size(), var), Polynomial<Rat>::constant(ring, Rat(1)));
  return op;
}

void DiffOp::add_term(const Monomial& partial, Polynomial<Rat> coeff) {
  if (!ring) throw std::logic_error("operator has no ring");
  if (partial.nvars() != ring->size()) {
    throw std::invalid_argument("derivative order width does not match ring");
  }
  if (!same_ring(coeff.ring(), ring)) {
    throw std::invalid_argument("operator coefficient ring mismatch");
  }
  if (coeff.is_zero()) return;
  auto it = terms.find(partial);
  if (it == terms.end()) {
    terms.emplace(partial, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

DiffOp diffop_from_multiplier(const Polynomial<Rat>& b, const RingPtr& xring) {
  std::size_t n = xring->size();
  if (b.ring()->size() != 2 * n) {
    throw std::invalid_argument("multiplier ring must double the coefficient ring");
  }
  DiffOp op(xring);
  for (const auto& [m, c] : b.terms()) {
    Monomial coeff_part(n), deriv_part(n);
    for (std::size_t v = 0; v < n; ++v) {
      coeff_part.e[v] = m.e[v];
      deriv_part.e[v] = m.e[n + v];
    }
    Polynomial<Rat> coeff(xring);
    coeff.add_term(coeff_part, c);
    op.add_term(deriv_part, std::move(coeff));
  }
  return op;
}

namespace {

template <class F>
F iterated_derivative(const Monomial& order, F f) {
  for (std::size_t v = 0; v < order.nvars(); ++v) {
    for (std::uint32_t i = 0; i < order.e[v]; ++i) f = f.differentiate(v);
  }
  return f;
}

}  // namespace

Polynomial<Rat> apply_diffop(const DiffOp& op, const Polynomial<Rat>& f) {
  if (!op.ring) throw std::logic_error("operator has no ring");
  if (!same_ring(op.ring, f.ring())) {
    throw std::invalid_argument("operator and argument ring mismatch");
  }
  Polynomial<Rat> acc(f.ring());
  for (const auto& [order, coeff] : op.terms) {
    acc += coeff * iterated_derivative(order, f);
  }
  return acc;
}

bool LinearPrime::contains(const Polynomial<Rat>& f) const {
  if (vanishing.empty()) return f.is_zero();
  for (std::size_t v : vanishing) {
    if (v >= f.ring()->size()) throw std::out_of_range("prime variable index out of range");
  }
  // Setting the generating variables to zero kills exactly the terms that
  // one of them divides; anything left is outside the ideal.
  for (const auto& [m, c] : f.terms()) {
    bool killed = false;
    for (std::size_t v : vanishing) {
      if (m.e[v] > 0) {
        killed = true;
        break;
      }
    }
    if (!killed) return false;
  }
  return true;
}

bool membership(const std::vector<std::pair<DiffOp, LinearPrime>>& conditions,
                const Polynomial<Rat>& f) {
  for (const auto& [op, prime] : conditions) {
    if (!prime.contains(apply_diffop(op, f))) return false;
  }
  return true;
}

ExpPolyFunction ExpPolyFunction::zero(RingPtr ring) {
  ExpPolyFunction f;
  f.ring_ = std::move(ring);
  if (!f.ring_) throw std::logic_error("function has no ring");
  return f;
}

ExpPolyFunction ExpPolyFunction::polynomial(Polynomial<Rat> p) {
  std::vector<Rat> freq(p.ring()->size(), Rat(0));
  return wave(std::move(p), std::move(freq));
}

ExpPolyFunction ExpPolyFunction::wave(Polynomial<Rat> p, std::vector<Rat> frequency) {
  ExpPolyFunction f = zero(p.ring());
  if (frequency.size() != f.ring_->size()) {
    throw std::invalid_argument("frequency dimension does not match ring");
  }
  f.add_wave(frequency, p);
  return f;
}

void ExpPolyFunction::add_wave(const std::vector<Rat>& frequency, const Polynomial<Rat>& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(frequency);
  if (it == terms_.end()) {
    terms_.emplace(frequency, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPolyFunction& ExpPolyFunction::operator+=(const ExpPolyFunction& other) {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("function ring mismatch");
  for (const auto& [freq, p] : other.terms_) add_wave(freq, p);
  return *this;
}

ExpPolyFunction& ExpPolyFunction::operator-=(const ExpPolyFunction& other) {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument("function ring mismatch");
  for (const auto& [freq, p] : other.terms_) add_wave(freq, -p);
  return *this;
}

ExpPolyFunction ExpPolyFunction::operator+(const ExpPolyFunction& other) const {
  ExpPolyFunction r = *this;
  r += other;
  return r;
}

ExpPolyFunction ExpPolyFunction::operator-(const ExpPolyFunction& other) const {
  ExpPolyFunction r = *this;
  r -= other;
  return r;
}

ExpPolyFunction ExpPolyFunction::operator*(const Rat& scalar) const {
  ExpPolyFunction r = zero(ring_);
  if (polycrit::is_zero(scalar)) return r;
  for (const auto& [freq, p] : terms_) r.terms_.emplace(freq, p * scalar);
  return r;
}

ExpPolyFunction ExpPolyFunction::differentiate(std::size_t var) const {
  if (!ring_) throw std::logic_error("function has no ring");
  if (var >= ring_->size()) throw std::out_of_range("differentiation variable out of range");
  ExpPolyFunction r = zero(ring_);
  // d/dz_v of p exp(a.z) is (dp/dz_v + a_v p) exp(a.z).
  for (const auto& [freq, p] : terms_) {
    r.add_wave(freq, p.differentiate(var) + p * freq[var]);
  }
  return r;
}

bool ExpPolyFunction::operator==(const ExpPolyFunction& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  return terms_ == other.terms_;
}

Polynomial<Rat> apply_poly_diffop(const Polynomial<Rat>& g, const Polynomial<Rat>& f) {
  if (g.ring()->size() != f.ring()->size()) {
    throw std::invalid_argument("operator and argument variable counts differ");
  }
  Polynomial<Rat> acc(f.ring());
  for (const auto& [order, c] : g.terms()) {
    acc += iterated_derivative(order, f) * c;
  }
  return acc;
}

ExpPolyFunction apply_poly_diffop(const Polynomial<Rat>& g, const ExpPolyFunction& f) {
  if (!f.ring()) throw std::logic_error("function has no ring");
  if (g.ring()->size() != f.ring()->size()) {
    throw std::invalid_argument("operator and argument variable counts differ");
  }
  ExpPolyFunction acc = ExpPolyFunction::zero(f.ring());
  for (const auto& [order, c] : g.terms()) {
    acc += iterated_derivative(order, f) * c;
  }
  return acc;
}

void PDEModule::validate() const {
  if (!ring) throw std::logic_error("module has no ring");
  if (k == 0) throw std::invalid_argument("module needs at least one component");
  for (const auto& g : generators) {
    if (g.size() != k) throw std::invalid_argument("generator length does not match k");
    for (const auto& p : g) {
      if (!same_ring(p.ring(), ring)) throw std::invalid_argument("generator ring mismatch");
    }
  }
}

ExpPolyFunction apply_module_generator(const std::vector<Polynomial<Rat>>& g,
                                       const std::vector<ExpPolyFunction>& phi) {
  if (g.size() != phi.size()) throw std::invalid_argument("generator and function lengths differ");
  if (phi.empty()) throw std::invalid_argument("empty function vector");
  ExpPolyFunction acc = ExpPolyFunction::zero(phi.front().ring());
  for (std::size_t j = 0; j < g.size(); ++j) {
    acc += apply_poly_diffop(g[j], phi[j]);
  }
  return acc;
}

bool is_module_solution(const PDEModule& m, const std::vector<ExpPolyFunction>& phi) {
  m.validate();
  if (phi.size() != m.k) throw std::invalid_argument("function vector length does not match k");
  for (const auto& g : m.generators) {
    if (!apply_module_generator(g, phi).is_zero()) return false;
  }
  return true;
}

bool verify_havetheform(const Polynomial<Rat>& xi, const Polynomial<Rat>& psi,
                        const Rat& alpha, const Rat& beta) {
  if (xi.ring()->size() != 1 || psi.ring()->size() != 1) {
    throw std::invalid_argument("placeholder functions must be univariate");
  }
  RingPtr zring = ring_x(3, "z");
  auto in_z3 = [&](const Polynomial<Rat>& f) {
    return substitute_linear(f, {{Rat(0), Rat(0), Rat(1)}}, {Rat(0)}, zring);
  };
  Polynomial<Rat> z1 = Polynomial<Rat>::variable(zring, 0);
  Polynomial<Rat> z2 = Polynomial<Rat>::variable(zring, 1);

  Polynomial<Rat> phi = in_z3(xi) + z2 * in_z3(psi) + z1 * in_z3(psi.differentiate(0)) +
                        z1 * z2 * alpha + z1 * beta;

  Polynomial<Rat> d1 = phi.differentiate(0);
  Polynomial<Rat> d2 = phi.differentiate(1);
  return d1.differentiate(0).is_zero() && d2.differentiate(1).is_zero() &&
         (d1.differentiate(2) - d2.differentiate(2).differentiate(2)).is_zero();
}

RatMatrix hankel_matrix(const std::vector<Rat>& u) {
  if (u.size() != 7) throw std::invalid_argument("hankel vector must have length 7");
  RatMatrix h(4, std::vector<Rat>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) h[i][j] = u[i + j];
  }
  return h;
}

PDEModule hankel_module() {
  PDEModule m;
  m.ring = ring_x(4);
  m.k = 7;
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<Polynomial<Rat>> g;
    g.reserve(7);
    for (std::size_t j = 0; j < 7; ++j) {
      if (j >= r && j < r + 4) {
        g.push_back(Polynomial<Rat>::variable(m.ring, j - r));
      } else {
        g.push_back(Polynomial<Rat>::zero(m.ring));
      }
    }
    m.generators.push_back(std::move(g));
  }
  return m;
}

std::vector<ExpPolyFunction> build_wave_solution(const std::vector<Rat>& u,
                                                 const Polynomial<Rat>& psi) {
  RatMatrix kernel = kernel_basis_exact(hankel_matrix(u));
  if (kernel.empty()) throw std::domain_error("matrix has full rank, no wave directions");
  if (psi.ring()->size() != kernel.size()) {
    throw std::invalid_argument("profile must have one variable per kernel vector");
  }
  RingPtr zring = ring_x(4, "z");
  Polynomial<Rat> profile =
      substitute_linear(psi, kernel, std::vector<Rat>(kernel.size(), Rat(0)), zring);
  std::vector<ExpPolyFunction> phi;
  phi.reserve(u.size());
  for (const Rat& c : u) {
    phi.push_back(ExpPolyFunction::polynomial(profile * c));
  }
  return phi;
}

}  // namespace polycrit
