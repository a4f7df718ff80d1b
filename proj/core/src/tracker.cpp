#include "polycrit/tracker.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace polycrit {

namespace {

double ninf(std::span<const CD> x) {
  double m = 0;
  for (const CD& v : x) m = std::max(m, std::abs(v));
  return m;
}

bool finite(std::span<const CD> x) {
  for (const CD& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

// Flattened term-list evaluator. All polynomials registered here share one
// power table per evaluation point, which is what makes Jacobian evaluation
// cheap inside the tracking loop.
class Compiled {
 public:
  explicit Compiled(std::size_t nvars) : nvars_(nvars), max_exp_(nvars, 0) {}

  void add(const Polynomial<CD>& p) {
    for (const auto& [m, c] : p.terms()) {
      Term t{c, static_cast<std::uint32_t>(factors_.size()), 0};
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (m.e[v] == 0) continue;
        factors_.push_back({static_cast<std::uint32_t>(v), m.e[v]});
        max_exp_[v] = std::max(max_exp_[v], m.e[v]);
        ++t.len;
      }
      terms_.push_back(t);
    }
    poly_off_.push_back(static_cast<std::uint32_t>(terms_.size()));
  }

  void finalize() {
    pow_off_.assign(nvars_ + 1, 0);
    for (std::size_t v = 0; v < nvars_; ++v) pow_off_[v + 1] = pow_off_[v] + max_exp_[v] + 1;
  }

  std::size_t table_size() const { return pow_off_[nvars_]; }

  void powers(std::span<const CD> x, std::vector<CD>& pw) const {
    pw.resize(table_size());
    for (std::size_t v = 0; v < nvars_; ++v) {
      std::uint32_t base = pow_off_[v];
      pw[base] = CD(1);
      for (std::uint32_t e = 1; e <= max_exp_[v]; ++e) pw[base + e] = pw[base + e - 1] * x[v];
    }
  }

  CD eval(std::size_t poly, const std::vector<CD>& pw) const {
    CD acc(0);
    for (std::uint32_t ti = poly_off_[poly]; ti < poly_off_[poly + 1]; ++ti) {
      const Term& t = terms_[ti];
      CD v = t.c;
      for (std::uint32_t fi = t.off; fi < t.off + t.len; ++fi) {
        v *= pw[pow_off_[factors_[fi].var] + factors_[fi].exp];
      }
      acc += v;
    }
    return acc;
  }

 private:
  struct Term {
    CD c;
    std::uint32_t off;
    std::uint32_t len;
  };
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
  };

  std::size_t nvars_;
  std::vector<Term> terms_;
  std::vector<Factor> factors_;
  std::vector<std::uint32_t> poly_off_{0};
  std::vector<std::uint32_t> max_exp_;
  std::vector<std::uint32_t> pow_off_;
};

CD pow_int(CD x, int e) {
  CD r(1);
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

void TrackerConfig::validate() const {
  auto positive = {initial_step, min_step,      corrector_tol, endpoint_tol,
                   dedup_tol,    reality_tol,   divergence_bound, residual_tol,
                   contraction_bound, nonvanishing_tol, consistency_tol, rank_tol};
  for (double v : positive) {
    if (!(v > 0)) throw std::invalid_argument("tracker tolerances must be positive");
  }
  if (!(min_step < initial_step)) {
    throw std::invalid_argument("minimum step must stay below the initial step");
  }
  if (threads < 1) throw std::invalid_argument("thread count must be at least 1");
  if (corrector_iters < 1 || endpoint_iters < 1 || max_steps < 1) {
    throw std::invalid_argument("iteration limits must be at least 1");
  }
}

unsigned long long StartSystem::path_count() const {
  unsigned long long total = 1;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("start system degrees must be at least 1");
    if (total > (1ull << 62) / static_cast<unsigned>(d)) {
      throw std::invalid_argument("path count overflows");
    }
    total *= static_cast<unsigned>(d);
  }
  return total;
}

std::vector<CD> StartSystem::root(unsigned long long index) const {
  std::vector<CD> x(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    int d = degrees[i];
    int k = static_cast<int>(index % static_cast<unsigned>(d));
    index /= static_cast<unsigned>(d);
    double radius = std::pow(std::abs(constants[i]), 1.0 / d);
    double angle = (std::arg(constants[i]) + 2.0 * std::numbers::pi * k) / d;
    x[i] = std::polar(radius, angle);
  }
  return x;
}

PolySystem<CD> StartSystem::to_system(const RingPtr& ring) const {
  if (ring->size() != degrees.size()) throw std::invalid_argument("ring does not match start system");
  PolySystem<CD> g(ring);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    Polynomial<CD> p(ring);
    p.add_term(Monomial::var(ring->size(), i, static_cast<std::uint32_t>(degrees[i])), CD(1));
    p.add_term(Monomial::unit(ring->size()), -constants[i]);
    g.push_back(std::move(p));
  }
  return g;
}

StartSystem make_start_system(const std::vector<int>& degrees, SeededRng& rng) {
  StartSystem s;
  s.degrees = degrees;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("start system degrees must be at least 1");
    double radius = 0.5 + rng.unit();
    s.constants.push_back(radius * rng.unit_complex());
  }
  return s;
}

struct Homotopy::Impl {
  RingPtr ring;
  std::size_t n = 0;
  StartSystem start;
  CD gamma;
  Compiled comp;  // entries 0..n-1 target, n + i*n + j its Jacobian

  Impl(PolySystem<CD> target, StartSystem s, CD g)
      : ring(target.ring), n(target.size()), start(std::move(s)), gamma(g), comp(target.ring->size()) {
    target.validate();
    if (n != ring->size()) throw std::invalid_argument("homotopy target is not square");
    if (start.degrees.size() != n || start.constants.size() != n) {
      throw std::invalid_argument("start system does not match the target");
    }
    for (const auto& p : target.polys) comp.add(p);
    for (const auto& p : target.polys) {
      for (std::size_t v = 0; v < n; ++v) comp.add(p.differentiate(v));
    }
    comp.finalize();
  }

  struct Work {
    std::vector<CD> pw;
    std::vector<CD> fx, gx, dgx;
    Eigen::MatrixXcd jac;
    Eigen::VectorXcd rhs, delta;
    explicit Work(std::size_t n)
        : fx(n), gx(n), dgx(n), jac(n, n), rhs(n), delta(n) {}
  };

  void eval_start(std::span<const CD> x, Work& w) const {
    for (std::size_t i = 0; i < n; ++i) {
      int d = start.degrees[i];
      CD lead = pow_int(x[i], d - 1);
      w.gx[i] = lead * x[i] - start.constants[i];
      w.dgx[i] = static_cast<double>(d) * lead;
    }
  }

  // Jacobian of H(x, t) and, via rhs, either H itself or -dH/dt.
  void eval_homotopy(std::span<const CD> x, double t, Work& w) const {
    comp.powers(x, w.pw);
    for (std::size_t i = 0; i < n; ++i) w.fx[i] = comp.eval(i, w.pw);
    eval_start(x, w);
    CD gscale = gamma * (1.0 - t);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CD v = t * comp.eval(n + i * n + j, w.pw);
        if (i == j) v += gscale * w.dgx[i];
        w.jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      }
    }
  }

  bool correct(std::vector<CD>& x, double t, const TrackerConfig& cfg, Work& w) const {
    for (int iter = 0; iter < cfg.corrector_iters; ++iter) {
      eval_homotopy(x, t, w);
      CD gscale = gamma * (1.0 - t);
      for (std::size_t i = 0; i < n; ++i) {
        w.rhs(static_cast<Eigen::Index>(i)) = -(gscale * w.gx[i] + t * w.fx[i]);
      }
      w.delta = w.jac.partialPivLu().solve(w.rhs);
      double dn = 0;
      for (std::size_t i = 0; i < n; ++i) {
        CD d = w.delta(static_cast<Eigen::Index>(i));
        if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) return false;
        x[i] += d;
        dn = std::max(dn, std::abs(d));
      }
      if (dn <= cfg.corrector_tol * (1.0 + ninf(x))) return true;
    }
    return false;
  }
};

Homotopy::Homotopy(PolySystem<CD> target, StartSystem start, CD gamma)
    : impl_(std::make_unique<Impl>(std::move(target), std::move(start), gamma)) {}
Homotopy::~Homotopy() = default;
Homotopy::Homotopy(Homotopy&&) noexcept = default;
Homotopy& Homotopy::operator=(Homotopy&&) noexcept = default;

unsigned long long Homotopy::path_count() const { return impl_->start.path_count(); }

PathResult Homotopy::track(unsigned long long index, const TrackerConfig& cfg) const {
  cfg.validate();
  const Impl& im = *impl_;
  Impl::Work w(im.n);
  PathResult out;
  out.point = im.start.root(index);
  std::vector<CD>& x = out.point;
  std::vector<CD> xp(im.n);

  double t = 0, h = cfg.initial_step;
  int successes = 0;
  while (t < 1.0) {
    if (++out.steps > cfg.max_steps) return out;
    double hstep = std::min(h, 1.0 - t);
    double tp = (1.0 - t <= h) ? 1.0 : t + hstep;

    // Euler predictor: J_H dx = gamma*G - F, x <- x + h*dx.
    im.eval_homotopy(x, t, w);
    for (std::size_t i = 0; i < im.n; ++i) {
      w.rhs(static_cast<Eigen::Index>(i)) = im.gamma * w.gx[i] - w.fx[i];
    }
    w.delta = w.jac.partialPivLu().solve(w.rhs);
    for (std::size_t i = 0; i < im.n; ++i) {
      xp[i] = x[i] + hstep * w.delta(static_cast<Eigen::Index>(i));
    }

    if (finite(xp) && im.correct(xp, tp, cfg, w)) {
      x = xp;
      t = tp;
      if (ninf(x) > cfg.divergence_bound) {
        out.status = PathStatus::Diverged;
        return out;
      }
      if (++successes >= 4) {
        h = std::min(h * 1.5, cfg.initial_step);
        successes = 0;
      }
    } else {
      successes = 0;
      h *= 0.5;
      if (h < cfg.min_step) return out;  // truncated
    }
  }
  out.status = PathStatus::Converged;
  return out;
}

RefineResult Homotopy::refine(std::vector<CD> x, const TrackerConfig& cfg) const {
  const Impl& im = *impl_;
  Impl::Work w(im.n);
  RefineResult r;
  double prev = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < cfg.endpoint_iters; ++iter) {
    im.eval_homotopy(x, 1.0, w);
    for (std::size_t i = 0; i < im.n; ++i) {
      w.rhs(static_cast<Eigen::Index>(i)) = -w.fx[i];
    }
    w.delta = w.jac.partialPivLu().solve(w.rhs);
    double dn = 0;
    bool ok = true;
    for (std::size_t i = 0; i < im.n; ++i) {
      CD d = w.delta(static_cast<Eigen::Index>(i));
      ok = ok && std::isfinite(d.real()) && std::isfinite(d.imag());
      dn = std::max(dn, std::abs(d));
    }
    if (!ok) break;
    for (std::size_t i = 0; i < im.n; ++i) x[i] += w.delta(static_cast<Eigen::Index>(i));
    if (std::isfinite(prev)) r.contraction = dn / std::max(prev, 1e-300);
    prev = dn;
    if (dn <= cfg.endpoint_tol * (1.0 + ninf(x))) {
      r.converged = true;
      break;
    }
  }
  r.point = std::move(x);
  if (finite(r.point)) {
    im.comp.powers(r.point, w.pw);
    double res = 0;
    for (std::size_t i = 0; i < im.n; ++i) res = std::max(res, std::abs(im.comp.eval(i, w.pw)));
    r.residual = res;
    if (!std::isfinite(res)) r.converged = false;
  } else {
    r.residual = std::numeric_limits<double>::infinity();
    r.converged = false;
  }
  return r;
}

bool canonical_less(std::span<const CD> a, std::span<const CD> b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    long long ra = llround(a[i].real() * 1e6), rb = llround(b[i].real() * 1e6);
    if (ra != rb) return ra < rb;
    long long ia = llround(a[i].imag() * 1e6), ib = llround(b[i].imag() * 1e6);
    if (ia != ib) return ia < ib;
  }
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return a.size() < b.size();
}

std::vector<Solution> dedup_solutions(std::vector<Solution> sorted, double tol,
                                      std::size_t* extra) {
  std::vector<Solution> kept;
  for (auto& s : sorted) {
    bool dup = false;
    for (const auto& k : kept) {
      double dist = 0;
      for (std::size_t i = 0; i < s.point.size(); ++i) {
        dist = std::max(dist, std::abs(s.point[i] - k.point[i]));
      }
      if (dist <= tol * (1.0 + ninf(k.point))) {
        dup = true;
        break;
      }
    }
    if (dup) {
      if (extra) ++*extra;
    } else {
      kept.push_back(std::move(s));
    }
  }
  return kept;
}

namespace {

enum class PathOutcome { Candidate, Failed, Diverged, Filtered };

struct PerPath {
  PathOutcome outcome = PathOutcome::Failed;
  std::vector<CD> point;
  double residual = 0;
  double certificate = 0;
};

bool is_real_point(std::span<const CD> x, double tol) {
  for (const CD& v : x) {
    if (std::abs(v.imag()) / (1.0 + std::abs(v.real())) > tol) return false;
  }
  return true;
}

}  // namespace

SolutionSet solve(const SquareSystem& sys, const TrackerConfig& cfg) {
  cfg.validate();
  sys.validate();
  std::vector<int> degrees = sys.equations.degrees();
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("system contains a constant equation");
  }

  // Rescale every equation by its largest coefficient; residuals and the
  // corrector then work on uniformly sized rows.
  PolySystem<CD> target = to_complex(sys.equations);
  for (auto& p : target.polys) {
    double m = 0;
    for (const auto& [mono, c] : p.terms()) m = std::max(m, std::abs(c));
    p *= CD(1.0 / m);
  }

  SeededRng rng(cfg.seed);
  StartSystem start = make_start_system(degrees, rng);
  CD gamma = rng.unit_complex();
  Homotopy hom(std::move(target), std::move(start), gamma);

  std::vector<PolySystem<CD>> side;  // 0: nonvanishing, 1: consistency
  side.emplace_back(sys.ring(), std::vector<Polynomial<CD>>{});
  side.emplace_back(sys.ring(), std::vector<Polynomial<CD>>{});
  for (const auto& p : sys.nonvanishing) side[0].push_back(to_complex(p));
  for (const auto& p : sys.consistency) side[1].push_back(to_complex(p));
  std::optional<PolyMatrix<CD>> rank_matrix;
  if (sys.rank_condition) {
    const auto& rc = *sys.rank_condition;
    PolyMatrix<CD> m(sys.ring(), rc.matrix.rows(), rc.matrix.cols());
    for (std::size_t i = 0; i < rc.matrix.rows(); ++i) {
      for (std::size_t j = 0; j < rc.matrix.cols(); ++j) m.at(i, j) = to_complex(rc.matrix.at(i, j));
    }
    rank_matrix = std::move(m);
  }

  auto run_path = [&](unsigned long long index) {
    PerPath out;
    PathResult tracked = hom.track(index, cfg);
    if (tracked.status == PathStatus::Diverged) {
      out.outcome = PathOutcome::Diverged;
      return out;
    }
    // Truncated endpoints go through the same gates as converged ones: a
    // stalled path inside the target's Newton basin is recovered, and the
    // residual and contraction checks reject anything that is not a root.
    RefineResult refined = hom.refine(std::move(tracked.point), cfg);
    out.point = std::move(refined.point);
    out.residual = refined.residual;
    out.certificate = refined.contraction;
    if (!refined.converged || refined.residual > cfg.residual_tol ||
        refined.contraction >= cfg.contraction_bound) {
      out.outcome = PathOutcome::Failed;
      return out;
    }
    if (ninf(out.point) > cfg.divergence_bound) {
      out.outcome = PathOutcome::Diverged;
      return out;
    }
    for (const auto& p : side[0].polys) {
      if (std::abs(p.evaluate(out.point)) < cfg.nonvanishing_tol) {
        out.outcome = PathOutcome::Filtered;
        return out;
      }
    }
    for (const auto& p : side[1].polys) {
      if (std::abs(p.evaluate(out.point)) > cfg.consistency_tol) {
        out.outcome = PathOutcome::Filtered;
        return out;
      }
    }
    if (rank_matrix) {
      Eigen::MatrixXcd m(rank_matrix->rows(), rank_matrix->cols());
      for (std::size_t i = 0; i < rank_matrix->rows(); ++i) {
        for (std::size_t j = 0; j < rank_matrix->cols(); ++j) {
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
              rank_matrix->at(i, j).evaluate(out.point);
        }
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
      const auto& sv = svd.singularValues();
      int rank = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cfg.rank_tol * sv(0)) ++rank;
      }
      if (rank < sys.rank_condition->required) {
        out.outcome = PathOutcome::Filtered;
        return out;
      }
    }
    out.outcome = PathOutcome::Candidate;
    return out;
  };

  unsigned long long paths = hom.path_count();
  std::vector<PerPath> per(paths);
  unsigned long long nthreads = std::min<unsigned long long>(
      static_cast<unsigned long long>(cfg.threads), paths == 0 ? 1 : paths);
  if (nthreads <= 1) {
    for (unsigned long long p = 0; p < paths; ++p) per[p] = run_path(p);
  } else {
    std::atomic<unsigned long long> next{0};
    auto worker = [&] {
      for (;;) {
        unsigned long long p = next.fetch_add(1);
        if (p >= paths) break;
        per[p] = run_path(p);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned long long i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SolutionSet set;
  set.paths = paths;
  set.expected_count = sys.expected_count;
  std::vector<Solution> candidates;
  for (unsigned long long p = 0; p < paths; ++p) {
    switch (per[p].outcome) {
      case PathOutcome::Failed:
        ++set.failed;
        break;
      case PathOutcome::Diverged:
        ++set.diverged;
        break;
      case PathOutcome::Filtered:
        ++set.filtered;
        break;
      case PathOutcome::Candidate: {
        Solution s;
        s.point = std::move(per[p].point);
        s.residual = per[p].residual;
        s.certificate = per[p].certificate;
        s.path_id = p;
        s.is_real = is_real_point(s.point, cfg.reality_tol);
        candidates.push_back(std::move(s));
        break;
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Solution& a, const Solution& b) {
    return canonical_less(a.point, b.point);
  });
  std::size_t extra = 0;
  set.solutions = dedup_solutions(std::move(candidates), cfg.dedup_tol, &extra);
  set.duplicates = extra;

  if (set.expected_count && *set.expected_count >= 0 &&
      static_cast<unsigned long long>(*set.expected_count) != set.solutions.size()) {
    set.warnings.push_back("expected " + std::to_string(*set.expected_count) +
                           " solutions, found " + std::to_string(set.solutions.size()));
  }
  return set;
}

std::size_t count_real(const SolutionSet& set) { return set.real_count(); }

const Solution& select_minimizer(
    const SolutionSet& set, const std::function<double(std::span<const CD>)>& objective,
    const std::function<bool(std::span<const CD>)>& feasible) {
  const Solution* best = nullptr;
  double best_value = std::numeric_limits<double>::infinity();
  for (const auto& s : set.solutions) {
    if (!s.is_real) continue;
    if (feasible && !feasible(s.point)) continue;
    double value = objective(s.point);
    if (value < best_value) {
      best_value = value;
      best = &s;
    }
  }
  if (!best) throw std::runtime_error("no feasible real solution");
  return *best;
}

}  // namespace polycrit
