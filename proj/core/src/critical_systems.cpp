#include "polycrit/critical_systems.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "polycrit/degree_oracle.hpp"

namespace polycrit {

namespace {

using PolyQ = Polynomial<Rat>;

PolyQ rat_const(const RingPtr& r, const Rat& v) { return PolyQ::constant(r, v); }

// First stem such that stem+0 .. stem+count are all free in the ring.
std::string free_stem(const Ring& ring, std::initializer_list<const char*> candidates, int count) {
  for (const char* stem : candidates) {
    bool ok = true;
    for (int i = 0; i <= count && ok; ++i) {
      ok = ring.index_of(std::string(stem) + std::to_string(i)) < 0;
    }
    if (ok) return stem;
  }
  throw std::invalid_argument("could not pick multiplier names; rename the model variables");
}

// Extends `base` by `extra` names; fills var_map with the positions of the
// base variables inside the new ring (they come first).
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra,
                    std::vector<std::size_t>& var_map) {
  std::vector<std::string> names = base->vars;
  names.insert(names.end(), extra.begin(), extra.end());
  var_map.resize(base->size());
  for (std::size_t i = 0; i < base->size(); ++i) var_map[i] = i;
  return make_ring(std::move(names));
}

std::optional<long long> to_count(const Int& value) {
  if (!value.fits_slong_p()) return std::nullopt;
  return static_cast<long long>(value.get_si());
}

std::vector<int> sorted_degrees(const PolySystem<Rat>& gens) {
  std::vector<int> d = gens.degrees();
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

// Asserts the Jacobian of the square system has full rank at a random
// complex point, i.e. the system is generically finite.
void assert_generically_finite(const SquareSystem& sys) {
  auto jac = jacobian(sys.equations);
  std::size_t n = sys.num_vars();
  SeededRng rng(0xC0FFEE);
  std::vector<CD> pt;
  pt.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pt.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
  Eigen::MatrixXcd J(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) J(i, j) = jac.at(i, j).evaluate(pt);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(J);
  if (qr.rank() < static_cast<Eigen::Index>(n)) {
    throw std::runtime_error("critical system is rank-deficient at a random point");
  }
}

int symmetric_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::string matrix_entry_name(const std::string& stem, int n, int i, int j) {
  if (n <= 9) return stem + std::to_string(i + 1) + std::to_string(j + 1);
  return stem + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

void require_symmetric(const RatMatrix& s, int n, const char* what) {
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument(std::string(what) + " has wrong size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(s[i].size()) != n) throw std::invalid_argument(std::string(what) + " has wrong size");
    for (int j = 0; j < i; ++j) {
      if (s[i][j] != s[j][i]) throw std::invalid_argument(std::string(what) + " is not symmetric");
    }
  }
}

std::vector<std::size_t> combination_first(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

bool combination_next(std::vector<std::size_t>& c, std::size_t limit) {
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

}  // namespace

void ModelSpec::validate() const {
  generators.validate();
  if (generators.size() == 0) throw std::invalid_argument("model has no generators");
  std::size_t n = ring()->size();
  if (codim < 1 || codim > static_cast<int>(n)) {
    throw std::invalid_argument("model codimension out of range");
  }
  if (generators.size() != static_cast<std::size_t>(codim)) {
    throw std::invalid_argument("builders require a complete intersection: one generator per codimension");
  }
  for (const auto& f : generators.polys) {
    if (f.total_degree() < 1) throw std::invalid_argument("model generator is constant");
  }
}

Polynomial<Rat> embed(const Polynomial<Rat>& p, const RingPtr& big,
                      const std::vector<std::size_t>& var_map) {
  if (var_map.size() != p.ring()->size()) {
    throw std::invalid_argument("embed: variable map does not cover the source ring");
  }
  PolyQ out(big);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(big->size());
    for (std::size_t v = 0; v < var_map.size(); ++v) mm.e.at(var_map[v]) = m.e[v];
    out.add_term(mm, c);
  }
  return out;
}

Polynomial<Rat> random_dense_poly(const RingPtr& ring, int degree, SeededRng& rng) {
  if (degree < 1) throw std::invalid_argument("random polynomial degree must be positive");
  std::size_t n = ring->size();
  for (;;) {
    PolyQ p(ring);
    // Enumerate all exponent vectors with total degree <= degree.
    Monomial m(n);
    std::function<void(std::size_t, int)> fill = [&](std::size_t v, int budget) {
      if (v == n) {
        p.add_term(m, rng.rat_int(-9, 9));
        return;
      }
      for (int e = 0; e <= budget; ++e) {
        m.e[v] = static_cast<std::uint32_t>(e);
        fill(v + 1, budget - e);
      }
      m.e[v] = 0;
    };
    fill(0, degree);
    if (p.total_degree() == degree) return p;
  }
}

SquareSystem build_ed_system(const ModelSpec& model, const std::vector<Rat>& u) {
  model.validate();
  const RingPtr& xr = model.ring();
  std::size_t n = xr->size();
  std::size_t k = model.generators.size();
  if (u.size() != n) throw std::invalid_argument("data point dimension does not match the model");

  SquareSystem sys;
  if (n == 2 && k == 1) {
    // Plane hypersurface: eliminate the single multiplier by hand, leaving
    // {f, (x1-u1) df/dx2 - (x2-u2) df/dx1}.
    const PolyQ& f = model.generators.polys[0];
    PolyQ shift1 = PolyQ::variable(xr, 0) - rat_const(xr, u[0]);
    PolyQ shift2 = PolyQ::variable(xr, 1) - rat_const(xr, u[1]);
    PolyQ g = shift1 * f.differentiate(1) - shift2 * f.differentiate(0);
    sys.equations = PolySystem<Rat>(xr, {f, g});
    sys.roles = {VarRole::Model, VarRole::Model};
    PolyMatrix<Rat> jf(xr, 1, 2);
    jf.at(0, 0) = f.differentiate(0);
    jf.at(0, 1) = f.differentiate(1);
    sys.rank_condition = RankCondition{std::move(jf), 1};
  } else {
    std::string stem = free_stem(*xr, {"y", "lam", "mult"}, static_cast<int>(k));
    std::vector<std::string> extra;
    for (std::size_t i = 1; i <= k; ++i) extra.push_back(stem + std::to_string(i));
    std::vector<std::size_t> var_map;
    RingPtr big = extend_ring(xr, extra, var_map);

    sys.equations = PolySystem<Rat>(big);
    PolyMatrix<Rat> jf(big, k, n);
    std::vector<PolyQ> multipliers;
    for (std::size_t i = 0; i < k; ++i) multipliers.push_back(PolyQ::variable(big, n + i));

    for (std::size_t i = 0; i < k; ++i) {
      sys.equations.push_back(embed(model.generators.polys[i], big, var_map));
    }
    for (std::size_t j = 0; j < n; ++j) {
      PolyQ eq = PolyQ::variable(big, j) - rat_const(big, u[j]);
      for (std::size_t i = 0; i < k; ++i) {
        PolyQ partial = embed(model.generators.polys[i].differentiate(j), big, var_map);
        jf.at(i, j) = partial;
        eq += multipliers[i] * partial;
      }
      sys.equations.push_back(std::move(eq));
    }
    sys.roles.assign(n, VarRole::Model);
    sys.roles.insert(sys.roles.end(), k, VarRole::Multiplier);
    sys.rank_condition = RankCondition{std::move(jf), static_cast<int>(k)};
  }

  sys.expected_count = to_count(
      ed_degree_ci(static_cast<int>(n), static_cast<int>(k), sorted_degrees(model.generators)));
  sys.validate();
  return sys;
}

SquareSystem build_linear_section_system(const ModelSpec& model, int section, SeededRng& rng) {
  model.validate();
  const RingPtr& xr = model.ring();
  int n = static_cast<int>(xr->size());
  int k = static_cast<int>(model.generators.size());
  int dim = n - k;
  if (section < 1 || section > dim + 1) {
    throw std::invalid_argument("section index must be in [1, dim + 1]");
  }
  int cuts = section - 1;

  auto random_row = [&](int len) {
    std::vector<Rat> row(len);
    for (;;) {
      bool nonzero = false;
      for (auto& v : row) {
        v = rng.rat_int(-9, 9);
        nonzero = nonzero || !is_zero(v);
      }
      if (nonzero) return row;
    }
  };

  // Draw order: objective gradient, then each cut row followed by its offset.
  std::vector<Rat> objective = random_row(n);
  std::vector<std::vector<Rat>> cut_rows;
  std::vector<Rat> cut_offsets;
  for (int l = 0; l < cuts; ++l) {
    cut_rows.push_back(random_row(n));
    cut_offsets.push_back(rng.rat_int(-9, 9));
  }

  std::string ystem = free_stem(*xr, {"y", "lam", "mult"}, k);
  std::string zstem = free_stem(*xr, {"z", "w", "sect"}, std::max(cuts, 1));
  std::vector<std::string> extra;
  for (int i = 1; i <= k; ++i) extra.push_back(ystem + std::to_string(i));
  for (int l = 1; l <= cuts; ++l) extra.push_back(zstem + std::to_string(l));
  std::vector<std::size_t> var_map;
  RingPtr big = extend_ring(xr, extra, var_map);

  SquareSystem sys;
  sys.equations = PolySystem<Rat>(big);
  PolyMatrix<Rat> constraints(big, k + cuts, n);

  for (int i = 0; i < k; ++i) {
    sys.equations.push_back(embed(model.generators.polys[i], big, var_map));
  }
  for (int l = 0; l < cuts; ++l) {
    PolyQ affine = rat_const(big, -cut_offsets[l]);
    for (int j = 0; j < n; ++j) affine += PolyQ::variable(big, j) * cut_rows[l][j];
    sys.equations.push_back(std::move(affine));
  }
  for (int j = 0; j < n; ++j) {
    PolyQ eq = rat_const(big, objective[j]);
    for (int i = 0; i < k; ++i) {
      PolyQ partial = embed(model.generators.polys[i].differentiate(j), big, var_map);
      constraints.at(i, j) = partial;
      eq -= PolyQ::variable(big, n + i) * partial;
    }
    for (int l = 0; l < cuts; ++l) {
      constraints.at(k + l, j) = rat_const(big, cut_rows[l][j]);
      eq -= PolyQ::variable(big, n + k + l) * cut_rows[l][j];
    }
    sys.equations.push_back(std::move(eq));
  }

  sys.roles.assign(n, VarRole::Model);
  sys.roles.insert(sys.roles.end(), k + cuts, VarRole::Multiplier);
  sys.rank_condition = RankCondition{std::move(constraints), k + cuts};

  if (n == 3 && k == 1) {
    auto polar = polar_degrees_surface(model.generators.polys[0].total_degree());
    sys.expected_count = to_count(polar[static_cast<std::size_t>(section - 1)]);
  }
  sys.validate();
  return sys;
}

void SymmetricMatrixSpace::validate() const {
  if (n < 1) throw std::invalid_argument("matrix space dimension must be positive");
  if (basis.empty()) throw std::invalid_argument("matrix space has no basis");
  for (const auto& a : basis) require_symmetric(a, n, "basis matrix");

  // Exact linear independence of the vectorized upper triangles.
  RatMatrix vec;
  for (const auto& a : basis) {
    std::vector<Rat> row;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) row.push_back(a[i][j]);
    }
    vec.push_back(std::move(row));
  }
  if (rank_exact(vec) != dim()) {
    throw std::invalid_argument("matrix space basis is linearly dependent");
  }

  // A generic element must be invertible; try three deterministic weightings.
  for (int attempt = 0; attempt < 3; ++attempt) {
    RatMatrix elem(n, std::vector<Rat>(n, Rat(0)));
    for (int a = 0; a < dim(); ++a) {
      Rat w(a + 1);
      if (attempt == 1) w = Rat((a + 1) * (a + 1));
      if (attempt == 2) w = Rat(mpz_class(1) << a);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) elem[i][j] += w * basis[a][i][j];
      }
    }
    if (!is_zero(det_exact(elem))) return;
  }
  throw std::invalid_argument("matrix space appears to contain no invertible element");
}

SymmetricMatrixSpace random_symmetric_space(int n, int k, SeededRng& rng) {
  if (n < 1 || k < 1 || k > n * (n + 1) / 2) {
    throw std::invalid_argument("matrix space parameters out of range");
  }
  SymmetricMatrixSpace space;
  space.n = n;
  for (int a = 0; a < k; ++a) {
    RatMatrix mat(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Rat v = rng.rat_int(-9, 9);
        mat[i][j] = v;
        mat[j][i] = v;
      }
    }
    space.basis.push_back(std::move(mat));
  }
  space.validate();
  return space;
}

RatMatrix random_sample_covariance(int n, SeededRng& rng) {
  if (n < 1) throw std::invalid_argument("sample dimension must be positive");
  int cols = n + 2;
  RatMatrix g(n, std::vector<Rat>(cols));
  for (auto& row : g) {
    for (auto& v : row) v = rng.rat_int(-9, 9);
  }
  RatMatrix s(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat acc(0);
      for (int c = 0; c < cols; ++c) acc += g[i][c] * g[j][c];
      s[i][j] = acc / cols;
    }
  }
  return s;
}

namespace {

// Shared assembly for both Gaussian likelihood parametrizations. `linear` is
// the matrix expanded in the span (K for concentration, Sigma for
// covariance); `full` is the matrix of free symmetric unknowns.
struct GaussianRing {
  RingPtr ring;
  std::vector<std::vector<PolyQ>> linear;  // n x n, linear in lam
  std::vector<std::vector<PolyQ>> full;    // n x n symmetric unknowns
  int k = 0, n = 0;
};

GaussianRing make_gaussian_ring(const SymmetricMatrixSpace& space, const std::string& full_stem) {
  GaussianRing g;
  g.n = space.n;
  g.k = space.dim();
  std::vector<std::string> names;
  for (int a = 1; a <= g.k; ++a) names.push_back("lam" + std::to_string(a));
  for (int i = 0; i < g.n; ++i) {
    for (int j = i; j < g.n; ++j) names.push_back(matrix_entry_name(full_stem, g.n, i, j));
  }
  g.ring = make_ring(std::move(names));

  g.linear.assign(g.n, std::vector<PolyQ>(g.n, PolyQ(g.ring)));
  g.full.assign(g.n, std::vector<PolyQ>(g.n, PolyQ(g.ring)));
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      PolyQ lin(g.ring);
      for (int a = 0; a < g.k; ++a) {
        lin += PolyQ::variable(g.ring, a) * space.basis[a][i][j];
      }
      g.linear[i][j] = std::move(lin);
      g.full[i][j] = PolyQ::variable(g.ring, g.k + symmetric_index(g.n, i, j));
    }
  }
  return g;
}

// Equations sym(A*B) - Id on the upper triangle plus the dropped
// antisymmetric entries of A*B as consistency conditions.
void append_inverse_pair(SquareSystem& sys, const GaussianRing& g,
                         const std::vector<std::vector<PolyQ>>& a,
                         const std::vector<std::vector<PolyQ>>& b) {
  int n = g.n;
  std::vector<std::vector<PolyQ>> prod(n, std::vector<PolyQ>(n, PolyQ(g.ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyQ acc(g.ring);
      for (int l = 0; l < n; ++l) acc += a[i][l] * b[l][j];
      prod[i][j] = std::move(acc);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      PolyQ eq = (prod[i][j] + prod[j][i]) * Rat(1, 2);
      if (i == j) eq -= rat_const(g.ring, Rat(1));
      sys.equations.push_back(std::move(eq));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      sys.consistency.push_back(prod[i][j] - prod[j][i]);
    }
  }
}

std::optional<long long> gaussian_expected(int n, int k, bool covariance) {
  if (k == n * (n + 1) / 2) return 1;
  if (n == 4 && k >= 2 && k <= 9) {
    auto g = gaussian_ml_degrees_n4(k);
    return covariance ? g.reciprocal : g.ml;
  }
  return std::nullopt;
}

}  // namespace

SquareSystem build_gaussian_concentration(const SymmetricMatrixSpace& space,
                                          const RatMatrix& sample) {
  space.validate();
  require_symmetric(sample, space.n, "sample covariance");
  GaussianRing g = make_gaussian_ring(space, "s");

  SquareSystem sys;
  sys.equations = PolySystem<Rat>(g.ring);
  // K in the span, Sigma free: sym(K Sigma) = Id.
  append_inverse_pair(sys, g, g.linear, g.full);
  // Sigma - sample orthogonal to the span.
  for (int a = 0; a < g.k; ++a) {
    PolyQ eq(g.ring);
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) {
        eq += (g.full[i][j] - rat_const(g.ring, sample[i][j])) * space.basis[a][i][j];
      }
    }
    sys.equations.push_back(std::move(eq));
  }

  sys.roles.assign(g.ring->size(), VarRole::Model);
  sys.expected_count = gaussian_expected(g.n, g.k, false);
  sys.validate();
  assert_generically_finite(sys);
  return sys;
}

SquareSystem build_gaussian_covariance(const SymmetricMatrixSpace& space,
                                       const RatMatrix& sample) {
  space.validate();
  require_symmetric(sample, space.n, "sample covariance");
  GaussianRing g = make_gaussian_ring(space, "c");

  SquareSystem sys;
  sys.equations = PolySystem<Rat>(g.ring);
  // Sigma in the span, K free: sym(K Sigma) = Id.
  append_inverse_pair(sys, g, g.full, g.linear);
  // K*sample*K - K orthogonal to the span.
  int n = g.n;
  std::vector<std::vector<PolyQ>> ks(n, std::vector<PolyQ>(n, PolyQ(g.ring)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      PolyQ acc(g.ring);
      for (int l = 0; l < n; ++l) acc += g.full[i][l] * sample[l][j];
      ks[i][j] = std::move(acc);
    }
  }
  for (int a = 0; a < g.k; ++a) {
    PolyQ eq(g.ring);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        PolyQ ksk(g.ring);
        for (int l = 0; l < n; ++l) ksk += ks[i][l] * g.full[l][j];
        eq += (ksk - g.full[i][j]) * space.basis[a][i][j];
      }
    }
    sys.equations.push_back(std::move(eq));
  }

  sys.roles.assign(g.ring->size(), VarRole::Model);
  sys.expected_count = gaussian_expected(g.n, g.k, true);
  sys.validate();
  assert_generically_finite(sys);
  return sys;
}

SquareSystem build_discrete_mle(const ModelSpec& model, const std::vector<Rat>& counts) {
  model.validate();
  const RingPtr& pr = model.ring();
  std::size_t np = pr->size();
  std::size_t k = model.generators.size();
  if (counts.size() != np) throw std::invalid_argument("count vector dimension does not match the model");
  for (const auto& u : counts) {
    if (sgn(u) <= 0) throw std::invalid_argument("counts must be positive");
  }

  std::string stem = free_stem(*pr, {"y", "lam", "mult"}, static_cast<int>(k) + 1);
  std::vector<std::string> extra;
  for (std::size_t i = 0; i <= k; ++i) extra.push_back(stem + std::to_string(i));
  std::vector<std::size_t> var_map;
  RingPtr big = extend_ring(pr, extra, var_map);
  auto mult = [&](std::size_t i) { return PolyQ::variable(big, np + i); };

  SquareSystem sys;
  sys.equations = PolySystem<Rat>(big);
  for (std::size_t i = 0; i < k; ++i) {
    sys.equations.push_back(embed(model.generators.polys[i], big, var_map));
  }
  PolyQ simplex = rat_const(big, Rat(-1));
  for (std::size_t j = 0; j < np; ++j) simplex += PolyQ::variable(big, j);
  sys.equations.push_back(std::move(simplex));
  for (std::size_t j = 0; j < np; ++j) {
    PolyQ scale = mult(0);
    for (std::size_t i = 0; i < k; ++i) {
      scale += mult(i + 1) * embed(model.generators.polys[i].differentiate(j), big, var_map);
    }
    sys.equations.push_back(PolyQ::variable(big, j) * scale - rat_const(big, counts[j]));
  }

  sys.roles.assign(np, VarRole::Model);
  sys.roles.insert(sys.roles.end(), k + 1, VarRole::Multiplier);
  for (std::size_t j = 0; j < np; ++j) sys.nonvanishing.push_back(PolyQ::variable(big, j));
  sys.validate();
  return sys;
}

std::vector<Rat> closed_form_mle_independence(const std::vector<Rat>& counts) {
  if (counts.size() != 4) throw std::invalid_argument("independence model needs a 2x2 table");
  for (const auto& u : counts) {
    if (sgn(u) <= 0) throw std::invalid_argument("counts must be positive");
  }
  Rat total = counts[0] + counts[1] + counts[2] + counts[3];
  Rat row0 = counts[0] + counts[1], row1 = counts[2] + counts[3];
  Rat col0 = counts[0] + counts[2], col1 = counts[1] + counts[3];
  Rat nn = total * total;
  return {row0 * col0 / nn, row0 * col1 / nn, row1 * col0 / nn, row1 * col1 / nn};
}

std::vector<Rat> closed_form_mle_coin(const std::vector<Rat>& counts) {
  if (counts.size() != 3) throw std::invalid_argument("coin model needs three counts");
  for (const auto& u : counts) {
    if (sgn(u) <= 0) throw std::invalid_argument("counts must be positive");
  }
  Rat a = 2 * counts[0] + counts[1];
  Rat b = counts[1] + counts[2];
  Rat d = 2 * counts[0] + 2 * counts[1] + counts[2];
  return {a * a / (d * d), a * b / (d * d), b / d};
}

ScatteringChart build_cegm_chart(int k, int m) {
  if (k < 2 || k > m - 2) throw std::invalid_argument("need 2 <= k <= m-2");
  int rows = k - 1, cols = m - k - 1;

  std::vector<std::string> names;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (rows == 1) {
        names.push_back("x" + std::to_string(j));
      } else {
        names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }
  RingPtr ring = make_ring(names);

  ScatteringChart chart;
  chart.k = k;
  chart.m = m;
  chart.ring = ring;
  chart.matrix = PolyMatrix<Rat>(ring, k, m);
  for (int r = 0; r < k; ++r) {
    // Antidiagonal sign block: row r has (-1)^(k-r) in column k-1-r.
    int sign = ((k - r) % 2 == 0) ? 1 : -1;
    chart.matrix.at(r, k - 1 - r) = rat_const(ring, Rat(sign));
    chart.matrix.at(r, k) = rat_const(ring, Rat(1));
    for (int j = 0; j < cols; ++j) {
      if (r == 0) {
        chart.matrix.at(r, k + 1 + j) = rat_const(ring, Rat(1));
      } else {
        chart.matrix.at(r, k + 1 + j) = PolyQ::variable(ring, (r - 1) * cols + j);
      }
    }
  }

  std::vector<std::size_t> all_rows = combination_first(k);
  std::vector<std::size_t> sel = combination_first(k);
  do {
    PolyQ minor = chart.matrix.submatrix(all_rows, sel).det();
    if (minor.is_zero()) throw std::logic_error("scattering chart produced a zero minor");
    if (minor.total_degree() < 1) continue;
    std::string label = "p";
    for (std::size_t idx : sel) {
      if (m > 9) label += "_";
      label += std::to_string(idx + 1);
    }
    chart.labels.push_back(std::move(label));
    chart.coords.push_back(std::move(minor));
  } while (combination_next(sel, m));
  return chart;
}

std::map<std::string, Rat> random_cegm_weights(const ScatteringChart& chart, SeededRng& rng) {
  std::map<std::string, Rat> u;
  for (const auto& label : chart.labels) u[label] = rng.rat_int(1, 99);
  return u;
}

SquareSystem build_cegm_scattering(int k, int m, const std::map<std::string, Rat>& weights) {
  ScatteringChart chart = build_cegm_chart(k, m);
  if (weights.size() != chart.labels.size()) {
    throw std::invalid_argument("weights must cover exactly the nonconstant chart coordinates");
  }
  std::vector<Rat> w;
  for (const auto& label : chart.labels) {
    auto it = weights.find(label);
    if (it == weights.end()) throw std::invalid_argument("missing weight for " + label);
    if (is_zero(it->second)) throw std::invalid_argument("weight for " + label + " must be nonzero");
    w.push_back(it->second);
  }

  SquareSystem sys;
  sys.equations = PolySystem<Rat>(chart.ring);
  std::size_t nvars = chart.ring->size();
  for (std::size_t v = 0; v < nvars; ++v) {
    // Clear denominators of sum_I u_I * d p_I/dx_v / p_I over the
    // coordinates that actually depend on x_v.
    std::vector<std::size_t> support;
    std::vector<PolyQ> partials;
    for (std::size_t i = 0; i < chart.coords.size(); ++i) {
      PolyQ d = chart.coords[i].differentiate(v);
      if (!d.is_zero()) {
        support.push_back(i);
        partials.push_back(std::move(d));
      }
    }
    PolyQ eq(chart.ring);
    for (std::size_t a = 0; a < support.size(); ++a) {
      PolyQ term = partials[a] * w[support[a]];
      for (std::size_t b = 0; b < support.size(); ++b) {
        if (b != a) term *= chart.coords[support[b]];
      }
      eq += term;
    }
    sys.equations.push_back(std::move(eq));
  }

  sys.roles.assign(nvars, VarRole::Model);
  sys.nonvanishing = chart.coords;
  if (auto count = cegm_ml_degree(k, m)) {
    if (count->fits_slong_p()) sys.expected_count = static_cast<long long>(count->get_si());
  }
  sys.validate();
  return sys;
}

}  // namespace polycrit
