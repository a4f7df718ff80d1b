// Polynomial layer tests. Derived expectations (hand-expanded partials,
// exact evaluations, substitution images) were computed independently and
// frozen here; property sections check algebraic identities on seeded input.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polycrit/monomial.hpp>
#include <polycrit/parse.hpp>
#include <polycrit/poly_matrix.hpp>
#include <polycrit/polynomial.hpp>
#include <polycrit/rng.hpp>

using namespace polycrit;

namespace {

Polynomial<Rat> random_poly(const RingPtr& ring, SeededRng& rng, int max_deg, int terms) {
  Polynomial<Rat> p(ring);
  std::size_t n = ring->size();
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (std::size_t v = 0; v < n; ++v) {
      m.e[v] = static_cast<std::uint32_t>(rng.uniform_int(0, max_deg));
    }
    p.add_term(m, rng.rat_int(-9, 9));
  }
  return p;
}

Polynomial<Rat> trott_curve(const RingPtr& ring) {
  return parse_polynomial(
      "144*x1^4 + 144*x2^4 - 225*x1^2 - 225*x2^2 + 350*x1^2*x2^2 + 81", ring);
}

}  // namespace

TEST_CASE("grevlex orders by degree then reversed exponents") {
  Monomial x1 = Monomial::var(2, 0);
  Monomial x2 = Monomial::var(2, 1);
  Monomial x1sq = Monomial::var(2, 0, 2);
  CHECK(grevlex_less(x2, x1));
  CHECK(grevlex_less(x1, x1sq));
  CHECK(grevlex_less(x2, x1sq));
  CHECK_FALSE(grevlex_less(x1, x1));

  // x1*x3 > x2^2 in grevlex on three variables.
  Monomial x1x3(std::vector<std::uint32_t>{1, 0, 1});
  Monomial x2sq(std::vector<std::uint32_t>{0, 2, 0});
  CHECK(grevlex_less(x1x3, x2sq));
}

TEST_CASE("arithmetic expands binomial square") {
  auto ring = ring_x(2);
  auto x1 = Polynomial<Rat>::variable(ring, 0);
  auto x2 = Polynomial<Rat>::variable(ring, 1);
  auto lhs = (x1 + x2).pow(2);
  auto rhs = x1 * x1 + x1 * x2 * Rat(2) + x2 * x2;
  CHECK(lhs == rhs);
  CHECK(lhs.nterms() == 3);
  CHECK(lhs.total_degree() == 2);
}

TEST_CASE("ring mismatch is rejected") {
  auto r2 = ring_x(2);
  auto r3 = ring_x(3);
  auto a = Polynomial<Rat>::variable(r2, 0);
  auto b = Polynomial<Rat>::variable(r3, 0);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("derivative of the quartic curve matches the hand expansion") {
  auto ring = ring_x(2);
  auto f = trott_curve(ring);
  auto expect = parse_polynomial("576*x1^3 + 700*x1*x2^2 - 450*x1", ring);
  CHECK(f.differentiate(0) == expect);
}

TEST_CASE("exact evaluation of the quartic curve at frozen points") {
  auto ring = ring_x(2);
  auto f = trott_curve(ring);
  std::vector<Rat> on_curve{Rat(1), Rat(0)};
  CHECK(f.evaluate_exact(on_curve) == 0);
  std::vector<Rat> off_curve{Rat(7, 8), Rat(1, 100)};
  CHECK(f.evaluate_exact(off_curve) == Rat(-1370234087, 200000000));
}

TEST_CASE("differentiation is linear and satisfies the product rule") {
  auto ring = ring_x(3);
  SeededRng rng(101);
  for (int rep = 0; rep < 100; ++rep) {
    auto f = random_poly(ring, rng, 3, 5);
    auto g = random_poly(ring, rng, 3, 5);
    Rat a = rng.rat_int(-9, 9);
    Rat b = rng.rat_int(-9, 9);
    std::size_t v = static_cast<std::size_t>(rng.uniform_int(0, 2));
    CHECK((f * a + g * b).differentiate(v) ==
          f.differentiate(v) * a + g.differentiate(v) * b);
    CHECK((f * g).differentiate(v) ==
          f.differentiate(v) * g + f * g.differentiate(v));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto ring = ring_x(3);
  SeededRng rng(102);
  for (int rep = 0; rep < 100; ++rep) {
    auto f = random_poly(ring, rng, 3, 4);
    auto g = random_poly(ring, rng, 3, 4);
    std::vector<CD> pt;
    for (int v = 0; v < 3; ++v) pt.emplace_back(rng.uniform(-2, 2), rng.uniform(-2, 2));
    CD sum = (f + g).evaluate(pt);
    CD prod = (f * g).evaluate(pt);
    CD fe = f.evaluate(pt), ge = g.evaluate(pt);
    CHECK(std::abs(sum - (fe + ge)) < 1e-9 * (1.0 + std::abs(fe) + std::abs(ge)));
    CHECK(std::abs(prod - fe * ge) < 1e-9 * (1.0 + std::abs(fe * ge)));
  }
}

TEST_CASE("exact and floating evaluation agree") {
  auto ring = ring_x(2);
  SeededRng rng(103);
  for (int rep = 0; rep < 50; ++rep) {
    auto f = random_poly(ring, rng, 4, 6);
    std::vector<Rat> qpt{rng.rat_int(-5, 5) / 3, rng.rat_int(-5, 5) / 7};
    std::vector<CD> cpt{to_cd(qpt[0]), to_cd(qpt[1])};
    double exact = to_double(f.evaluate_exact(qpt));
    CD approx = f.evaluate(cpt);
    CHECK(std::abs(approx.real() - exact) < 1e-10 * (1.0 + std::abs(exact)));
    CHECK(std::abs(approx.imag()) == 0.0);
  }
}

TEST_CASE("parser accepts the grammar and reports error positions") {
  auto ring = ring_x(2);
  auto f = parse_polynomial("-x1^2*x2 + 3/4*x2 - 7", ring);
  CHECK(f.nterms() == 3);
  CHECK(f.total_degree() == 3);

  CHECK_THROWS_AS(parse_polynomial("", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x3 + 1", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 + + x2", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 x2", ring), ParseError);

  try {
    parse_polynomial("x1 + zz", ring);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("format/parse round trip on seeded random polynomials") {
  auto ring = ring_x(3);
  SeededRng rng(104);
  for (int rep = 0; rep < 100; ++rep) {
    Polynomial<Rat> p(ring);
    for (int t = 0; t < 10; ++t) {
      Monomial m(3);
      for (std::size_t v = 0; v < 3; ++v) {
        m.e[v] = static_cast<std::uint32_t>(rng.uniform_int(0, 4));
      }
      p.add_term(m, rng.rat_int(-20, 20) / rng.rat_int_nonzero(1, 9));
    }
    CHECK(parse_polynomial(format_polynomial(p), ring) == p);
  }
  CHECK(format_polynomial(Polynomial<Rat>::zero(ring)) == "0");
  CHECK(parse_polynomial("0", ring).is_zero());
}

TEST_CASE("determinant of a 2x2 symbolic matrix") {
  auto ring = ring_x(4);
  PolyMatrix<Rat> m(ring, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m.at(i, j) = Polynomial<Rat>::variable(ring, 2 * i + j);
    }
  }
  auto expect = parse_polynomial("x1*x4 - x2*x3", ring);
  CHECK(m.det() == expect);
}

TEST_CASE("Laplace and fraction-free determinants agree on seeded matrices") {
  SeededRng rng(105);
  for (std::size_t size : {3u, 4u, 5u}) {
    auto ring = ring_x(3);
    for (int rep = 0; rep < 10; ++rep) {
      PolyMatrix<Rat> m(ring, size, size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          m.at(i, j) = random_poly(ring, rng, 1, 2);
        }
      }
      CHECK(m.det_laplace() == m.det_bareiss());
    }
  }
}

TEST_CASE("determinant rejects non-square matrices") {
  auto ring = ring_x(2);
  PolyMatrix<Rat> m(ring, 2, 3);
  CHECK_THROWS_AS(m.det(), std::invalid_argument);
  CHECK_THROWS_AS(m.minors(4), std::invalid_argument);
}

TEST_CASE("minors enumerate in row-major lexicographic order") {
  auto ring = ring_x(6);
  PolyMatrix<Rat> m(ring, 2, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      m.at(i, j) = Polynomial<Rat>::variable(ring, 3 * i + j);
    }
  }

  auto ones = m.minors(1);
  REQUIRE(ones.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(ones.polys[k] == Polynomial<Rat>::variable(ring, k));
  }

  auto twos = m.minors(2);
  REQUIRE(twos.size() == 3);
  CHECK(twos.polys[0] == parse_polynomial("x1*x5 - x2*x4", ring));
  CHECK(twos.polys[1] == parse_polynomial("x1*x6 - x3*x4", ring));
  CHECK(twos.polys[2] == parse_polynomial("x2*x6 - x3*x5", ring));
}

TEST_CASE("symbolic Jacobian matches central finite differences") {
  auto ring = ring_x(3);
  SeededRng rng(106);
  PolySystem<Rat> sys(ring);
  sys.push_back(random_poly(ring, rng, 3, 6));
  sys.push_back(random_poly(ring, rng, 4, 6));
  auto jac = jacobian(sys);
  REQUIRE(jac.rows() == 2);
  REQUIRE(jac.cols() == 3);

  const double h = 1e-5;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<CD> pt;
    for (int v = 0; v < 3; ++v) pt.emplace_back(rng.uniform(-1.5, 1.5), 0.0);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t v = 0; v < 3; ++v) {
        std::vector<CD> hi = pt, lo = pt;
        hi[v] += h;
        lo[v] -= h;
        CD fd = (sys.polys[i].evaluate(hi) - sys.polys[i].evaluate(lo)) / (2.0 * h);
        CD sym = jac.at(i, v).evaluate(pt);
        CHECK(std::abs(fd - sym) < 1e-6 * (1.0 + std::abs(sym)));
      }
    }
  }
}

TEST_CASE("exact division inverts multiplication") {
  auto ring = ring_x(3);
  SeededRng rng(107);
  for (int rep = 0; rep < 50; ++rep) {
    auto f = random_poly(ring, rng, 3, 4);
    auto g = random_poly(ring, rng, 3, 4);
    if (g.is_zero()) continue;
    CHECK(divide_exact(f * g, g) == f);
  }
  auto x1 = Polynomial<Rat>::variable(ring, 0);
  auto x2 = Polynomial<Rat>::variable(ring, 1);
  CHECK_THROWS_AS(divide_exact(x1 * x1 + x2, x1), std::domain_error);
}

TEST_CASE("linear substitution matches the frozen expansion") {
  auto wring = ring_x(2, "w");
  auto zring = ring_x(3, "z");
  auto psi = Polynomial<Rat>::variable(wring, 0) * Polynomial<Rat>::variable(wring, 1);
  // w1 = 2 z1 - z2, w2 = 2 z2 - z3.
  std::vector<std::vector<Rat>> A{{Rat(2), Rat(-1), Rat(0)}, {Rat(0), Rat(2), Rat(-1)}};
  std::vector<Rat> b{Rat(0), Rat(0)};
  auto img = substitute_linear(psi, A, b, zring);
  auto expect = parse_polynomial("4*z1*z2 - 2*z1*z3 - 2*z2^2 + z2*z3", zring);
  CHECK(img == expect);

  std::vector<std::vector<Rat>> bad{{Rat(1), Rat(0), Rat(0)}};
  CHECK_THROWS_AS(substitute_linear(psi, bad, b, zring), std::invalid_argument);
}

TEST_CASE("rational to double conversion is round-to-nearest") {
  CHECK(to_double(Rat(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(Rat(-7, 8)) == -0.875);
  // 2^60 + 1 is not representable; nearest double is 2^60.
  Rat big = Rat(1) << 60;
  CHECK(to_double(big + 1) == std::ldexp(1.0, 60));
}
