#include <benchmark/benchmark.h>

#include <polycrit/critical_systems.hpp>
#include <polycrit/degree_oracle.hpp>
#include <polycrit/parse.hpp>
#include <polycrit/poly_matrix.hpp>
#include <polycrit/rng.hpp>
#include <polycrit/tracker.hpp>

using namespace polycrit;

namespace {

Polynomial<Rat> dense_poly(const RingPtr& ring, SeededRng& rng, int deg, int terms) {
  Polynomial<Rat> p(ring);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v) {
      m.e[v] = static_cast<std::uint32_t>(rng.uniform_int(0, deg));
    }
    p.add_term(m, rng.rat_int(-9, 9));
  }
  return p;
}

}  // namespace

static void BM_PolyMultiply(benchmark::State& state) {
  auto ring = ring_x(4);
  SeededRng rng(1);
  auto f = dense_poly(ring, rng, 3, 20);
  auto g = dense_poly(ring, rng, 3, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_PolyMultiply);

static void BM_Det4Exact(benchmark::State& state) {
  auto ring = ring_x(3);
  SeededRng rng(2);
  PolyMatrix<Rat> m(ring, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = dense_poly(ring, rng, 1, 3);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.det());
  }
}
BENCHMARK(BM_Det4Exact);

static void BM_EvaluateQuartic(benchmark::State& state) {
  auto ring = ring_x(2);
  auto f = parse_polynomial(
      "144*x1^4 + 144*x2^4 - 225*x1^2 - 225*x2^2 + 350*x1^2*x2^2 + 81", ring);
  std::vector<CD> pt{CD(0.83, 0.19), CD(-1.07, 0.4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.evaluate(pt));
  }
}
BENCHMARK(BM_EvaluateQuartic);

static void BM_EdDegreeCi(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ed_degree_ci(7, 3, {4, 4, 3}));
  }
}
BENCHMARK(BM_EdDegreeCi);

static void BM_TrackQuarticDistance(benchmark::State& state) {
  auto ring = ring_x(2);
  ModelSpec quartic;
  quartic.generators = PolySystem<Rat>(
      ring, {parse_polynomial(
                "144*x1^4 + 144*x2^4 - 225*x1^2 - 225*x2^2 + 350*x1^2*x2^2 + 81", ring)});
  quartic.codim = 1;
  SquareSystem sys = build_ed_system(quartic, {Rat(7, 8), Rat(1, 100)});
  TrackerConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(sys, cfg));
  }
}
BENCHMARK(BM_TrackQuarticDistance);

BENCHMARK_MAIN();
