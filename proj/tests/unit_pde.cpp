// Tests for the PDE side of the library: differential membership tests,
// exponential-polynomial solutions, and wave solutions from low-rank
// coefficient matrices. Oracle polynomials were expanded by hand.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <polycrit/critical_systems.hpp>
#include <polycrit/parse.hpp>
#include <polycrit/pde.hpp>
#include <polycrit/rng.hpp>

using namespace polycrit;

namespace {

PolySystem<Rat> system_of(const RingPtr& ring, std::vector<std::string> texts) {
  PolySystem<Rat> s(ring);
  for (const auto& t : texts) s.push_back(parse_polynomial(t, ring));
  return s;
}

// The double-line ideal used throughout: its variety is the third axis.
PolySystem<Rat> axis_ideal(const RingPtr& r3) {
  return system_of(r3, {"x1^2", "x2^2", "x1*x3 - x2*x3^2"});
}

// Membership conditions for the double-line ideal, one operator per prime.
std::vector<std::pair<DiffOp, LinearPrime>> axis_conditions(const RingPtr& r3) {
  auto xz = make_ring({"x1", "x2", "x3", "z1", "z2", "z3"});
  auto op = [&](const std::string& text) {
    return diffop_from_multiplier(parse_polynomial(text, xz), r3);
  };
  LinearPrime line = LinearPrime::coordinates({0, 1});
  LinearPrime origin = LinearPrime::coordinates({0, 1, 2});
  return {{op("1"), line}, {op("x3*z1 + z2"), line}, {op("z1*z2"), origin}, {op("z1"), origin}};
}

std::vector<ExpPolyFunction> poly_vector(std::vector<Polynomial<Rat>> ps) {
  std::vector<ExpPolyFunction> out;
  for (auto& p : ps) out.push_back(ExpPolyFunction::polynomial(std::move(p)));
  return out;
}

}  // namespace

TEST_CASE("exponential solutions are the variety points") {
  auto r3 = ring_x(3);
  auto coords = system_of(r3, {"x1", "x2"});
  std::vector<Rat> on_axis = {Rat(0), Rat(0), Rat(5)};
  CHECK(is_exponential_solution(coords, on_axis));

  auto r2 = ring_x(2);
  auto circle = system_of(r2, {"x1^2 + x2^2 - 1"});
  std::vector<Rat> a = {Rat(1), Rat(0)};
  CHECK(is_exponential_solution(circle, a));
  std::vector<Rat> b = {Rat(3, 5), Rat(4, 5)};
  CHECK(is_exponential_solution(circle, b));
  std::vector<Rat> off = {Rat(1), Rat(1)};
  CHECK_FALSE(is_exponential_solution(circle, off));

  auto ideal = axis_ideal(r3);
  for (Rat t : {Rat(0), Rat(3, 7), Rat(-2), Rat(19)}) {
    std::vector<Rat> p = {Rat(0), Rat(0), t};
    CHECK(is_exponential_solution(ideal, p));
  }
  std::vector<Rat> nearby = {Rat(1, 100), Rat(0), Rat(1)};
  CHECK_FALSE(is_exponential_solution(ideal, nearby));

  std::vector<Rat> short_point = {Rat(0), Rat(0)};
  CHECK_THROWS_AS(is_exponential_solution(ideal, short_point), std::invalid_argument);
}

TEST_CASE("float and exact evaluation agree on integer points") {
  auto r2 = ring_x(2);
  auto circle = system_of(r2, {"x1^2 + x2^2 - 1"});
  auto r3 = ring_x(3);
  auto ideal = axis_ideal(r3);

  SeededRng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rat> p2 = {rng.rat_int(-3, 3), rng.rat_int(-3, 3)};
    std::vector<CD> q2 = {to_cd(p2[0]), to_cd(p2[1])};
    CHECK(is_exponential_solution(circle, p2) == is_exponential_solution(circle, q2));

    std::vector<Rat> p3 = {rng.rat_int(-3, 3), rng.rat_int(-3, 3), rng.rat_int(-3, 3)};
    std::vector<CD> q3 = {to_cd(p3[0]), to_cd(p3[1]), to_cd(p3[2])};
    CHECK(is_exponential_solution(ideal, p3) == is_exponential_solution(ideal, q3));
  }

  std::vector<CD> on_circle = {CD(0.6, 0.0), CD(0.8, 0.0)};
  CHECK(is_exponential_solution(circle, on_circle));
}

TEST_CASE("operators keep their coefficients to the left") {
  auto r1 = make_ring({"x1"});
  auto xz1 = make_ring({"x1", "z1"});
  DiffOp scaled = diffop_from_multiplier(parse_polynomial("x1*z1", xz1), r1);
  Polynomial<Rat> x1 = Polynomial<Rat>::variable(r1, 0);
  // x1 d1 applied to x1 is x1 * 1; differentiating x1^2 instead would give 2 x1.
  CHECK(apply_diffop(scaled, x1) == x1);

  auto r3 = ring_x(3);
  auto xz3 = make_ring({"x1", "x2", "x3", "z1", "z2", "z3"});
  DiffOp d = diffop_from_multiplier(parse_polynomial("x3*z1", xz3), r3);
  SeededRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial<Rat> f = random_dense_poly(r3, 3, rng);
    Polynomial<Rat> expected = Polynomial<Rat>::variable(r3, 2) * f.differentiate(0);
    CHECK(apply_diffop(d, f) == expected);
  }
}

TEST_CASE("operator application matches hand expansions") {
  auto r3 = ring_x(3);
  Polynomial<Rat> f = parse_polynomial("x1 - x2*x3", r3);
  CHECK(apply_diffop(DiffOp::identity(r3), f) == f);
  CHECK(apply_diffop(DiffOp::partial(r3, 0), parse_polynomial("x1^2", r3)) ==
        parse_polynomial("2*x1", r3));

  auto xz = make_ring({"x1", "x2", "x3", "z1", "z2", "z3"});
  DiffOp tilt = diffop_from_multiplier(parse_polynomial("x3*z1 + z2", xz), r3);
  CHECK(apply_diffop(tilt, f).is_zero());
  CHECK(apply_diffop(tilt, parse_polynomial("x1^2", r3)) == parse_polynomial("2*x1*x3", r3));
  CHECK(apply_diffop(tilt, parse_polynomial("x2^2", r3)) == parse_polynomial("2*x2", r3));
  CHECK(apply_diffop(tilt, Polynomial<Rat>::variable(r3, 0)) ==
        Polynomial<Rat>::variable(r3, 2));

  auto r2 = ring_x(2);
  CHECK_THROWS_AS(apply_diffop(tilt, Polynomial<Rat>::variable(r2, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(diffop_from_multiplier(parse_polynomial("x1", r3), r3),
                  std::invalid_argument);
}

TEST_CASE("coordinate primes test membership by truncation") {
  auto r3 = ring_x(3);
  LinearPrime line = LinearPrime::coordinates({0, 1});
  CHECK(line.contains(parse_polynomial("x1*x3 - x2*x3^2", r3)));
  CHECK(line.contains(parse_polynomial("x1 + x2^4", r3)));
  CHECK(line.contains(Polynomial<Rat>::zero(r3)));
  CHECK_FALSE(line.contains(parse_polynomial("x3", r3)));
  CHECK_FALSE(line.contains(parse_polynomial("x1 + 1", r3)));
  CHECK_FALSE(line.contains(Polynomial<Rat>::constant(r3, Rat(1))));

  LinearPrime zero = LinearPrime::zero_ideal();
  CHECK(zero.contains(Polynomial<Rat>::zero(r3)));
  CHECK_FALSE(zero.contains(parse_polynomial("x1", r3)));

  LinearPrime bad = LinearPrime::coordinates({5});
  CHECK_THROWS_AS(bad.contains(parse_polynomial("x1", r3)), std::out_of_range);
}

TEST_CASE("membership in a primary ideal via two operators") {
  auto r3 = ring_x(3);
  auto xz = make_ring({"x1", "x2", "x3", "z1", "z2", "z3"});
  LinearPrime line = LinearPrime::coordinates({0, 1});
  std::vector<std::pair<DiffOp, LinearPrime>> conditions = {
      {diffop_from_multiplier(parse_polynomial("1", xz), r3), line},
      {diffop_from_multiplier(parse_polynomial("x3*z1 + z2", xz), r3), line},
  };

  CHECK(membership(conditions, parse_polynomial("x1^2", r3)));
  CHECK(membership(conditions, parse_polynomial("x2^2", r3)));
  CHECK(membership(conditions, parse_polynomial("x1 - x2*x3", r3)));
  CHECK(membership(conditions, Polynomial<Rat>::zero(r3)));
  // x1 lies in the prime but its tilted derivative x3 does not.
  CHECK_FALSE(membership(conditions, parse_polynomial("x1", r3)));
  CHECK_FALSE(membership(conditions, parse_polynomial("x2*x3", r3)));
}

TEST_CASE("membership in the double-line ideal") {
  auto r3 = ring_x(3);
  auto conditions = axis_conditions(r3);

  for (const char* text : {"x1^2", "x2^2", "x1*x3 - x2*x3^2", "x1^4", "x2^2*x3",
                           "x1^3 - x1^2*x2*x3", "x1^2*x3"}) {
    CAPTURE(text);
    CHECK(membership(conditions, parse_polynomial(text, r3)));
  }
  for (const char* text : {"1", "x1", "x2", "x3", "x1*x2", "x1*x3", "x2*x3",
                           "x1 - x2*x3", "x1^2 + x2", "x2^2 + x3"}) {
    CAPTURE(text);
    CHECK_FALSE(membership(conditions, parse_polynomial(text, r3)));
  }
}

TEST_CASE("ideal membership survives multiplication") {
  auto r3 = ring_x(3);
  auto conditions = axis_conditions(r3);
  std::vector<Polynomial<Rat>> members = {
      parse_polynomial("x1^2", r3),
      parse_polynomial("x2^2", r3),
      parse_polynomial("x1*x3 - x2*x3^2", r3),
  };
  SeededRng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& f = members[static_cast<std::size_t>(rng.uniform_int(0, 2))];
    Polynomial<Rat> g = random_dense_poly(r3, 2, rng);
    CHECK(membership(conditions, f * g));
  }
  // Sums of members stay inside as well.
  Polynomial<Rat> mixed = members[0] * parse_polynomial("x3^2 - 4", r3) +
                          members[2] * parse_polynomial("x1 + x2 + 1", r3);
  CHECK(membership(conditions, mixed));
}

TEST_CASE("exponential polynomial calculus") {
  auto z2 = ring_x(2, "z");
  std::vector<Rat> freq = {Rat(2), Rat(0)};
  ExpPolyFunction f = ExpPolyFunction::wave(Polynomial<Rat>::variable(z2, 0), freq);
  ExpPolyFunction df = f.differentiate(0);
  CHECK(df == ExpPolyFunction::wave(parse_polynomial("2*z1 + 1", z2), freq));
  CHECK(f.differentiate(1).is_zero());

  CHECK((f - f).is_zero());
  std::vector<Rat> other = {Rat(0), Rat(1)};
  ExpPolyFunction sum = f + ExpPolyFunction::wave(Polynomial<Rat>::constant(z2, Rat(1)), other);
  CHECK(sum.terms().size() == 2);
  CHECK((sum - f).terms().size() == 1);

  CHECK_THROWS_AS(f.differentiate(5), std::out_of_range);
  std::vector<Rat> narrow = {Rat(1)};
  CHECK_THROWS_AS(ExpPolyFunction::wave(Polynomial<Rat>::variable(z2, 0), narrow),
                  std::invalid_argument);
}

TEST_CASE("constant coefficient operators act by differentiation") {
  auto x2 = ring_x(2);
  auto z2 = ring_x(2, "z");
  Polynomial<Rat> g = parse_polynomial("x1^2 + x2", x2);
  Polynomial<Rat> f = parse_polynomial("z1^3*z2", z2);
  CHECK(apply_poly_diffop(g, f) == parse_polynomial("z1^3 + 6*z1*z2", z2));

  ExpPolyFunction wave =
      ExpPolyFunction::wave(Polynomial<Rat>::constant(z2, Rat(1)), {Rat(3), Rat(0)});
  ExpPolyFunction image = apply_poly_diffop(g, wave);
  CHECK(image == ExpPolyFunction::wave(Polynomial<Rat>::constant(z2, Rat(9)), {Rat(3), Rat(0)}));

  auto z3 = ring_x(3, "z");
  CHECK_THROWS_AS(apply_poly_diffop(g, Polynomial<Rat>::variable(z3, 0)),
                  std::invalid_argument);
}

TEST_CASE("discrete measures on the line give module solutions") {
  auto x3 = ring_x(3);
  auto z3 = ring_x(3, "z");
  PDEModule q;
  q.ring = x3;
  q.k = 1;
  for (const char* text : {"x1^2", "x2^2", "x1 - x2*x3"}) {
    q.generators.push_back({parse_polynomial(text, x3)});
  }

  for (Rat t : {Rat(2), Rat(-1, 3), Rat(0)}) {
    std::vector<Rat> freq = {Rat(0), Rat(0), t};
    auto plain = ExpPolyFunction::wave(Polynomial<Rat>::constant(z3, Rat(1)), freq);
    CHECK(is_module_solution(q, {plain}));

    Polynomial<Rat> linear =
        Polynomial<Rat>::variable(z3, 1) + Polynomial<Rat>::variable(z3, 0) * t;
    auto tilted = ExpPolyFunction::wave(linear, freq);
    CHECK(is_module_solution(q, {tilted}));

    auto wrong = ExpPolyFunction::wave(Polynomial<Rat>::variable(z3, 0), freq);
    CHECK_FALSE(is_module_solution(q, {wrong}));
  }
}

TEST_CASE("solution form for the double-line system") {
  auto t1 = make_ring({"t"});
  CHECK(verify_havetheform(parse_polynomial("t^3", t1), parse_polynomial("t^2", t1),
                           Rat(1), Rat(2)));
  CHECK(verify_havetheform(Polynomial<Rat>::zero(t1), Polynomial<Rat>::zero(t1), Rat(0),
                           Rat(0)));

  SeededRng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial<Rat> xi = random_dense_poly(t1, 5, rng);
    Polynomial<Rat> psi = random_dense_poly(t1, 4, rng);
    CHECK(verify_havetheform(xi, psi, rng.rat_int(-9, 9), rng.rat_int(-9, 9)));
  }

  auto r2 = ring_x(2);
  CHECK_THROWS_AS(verify_havetheform(Polynomial<Rat>::variable(r2, 0),
                                     Polynomial<Rat>::zero(t1), Rat(0), Rat(0)),
                  std::invalid_argument);

  // The same check done by hand, plus a perturbation that breaks it.
  auto x3 = ring_x(3);
  auto z3 = ring_x(3, "z");
  Polynomial<Rat> phi =
      parse_polynomial("z3^3 + z2*z3^2 + 2*z1*z3 + z1*z2 + 2*z1", z3);
  for (const char* text : {"x1^2", "x2^2", "x1*x3 - x2*x3^2"}) {
    CHECK(apply_poly_diffop(parse_polynomial(text, x3), phi).is_zero());
  }
  Polynomial<Rat> bent = phi + parse_polynomial("z1^2", z3);
  CHECK(apply_poly_diffop(parse_polynomial("x1^2", x3), bent) ==
        Polynomial<Rat>::constant(z3, Rat(2)));
}

TEST_CASE("hankel layout and exact ranks") {
  std::vector<Rat> doubling = {Rat(1), Rat(2), Rat(4), Rat(8), Rat(16), Rat(32), Rat(64)};
  RatMatrix h = hankel_matrix(doubling);
  CHECK(h[0][3] == Rat(8));
  CHECK(h[3][0] == Rat(8));
  CHECK(h[2][3] == Rat(32));
  CHECK(rank_exact(h) == 1);

  std::vector<Rat> spike = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
  CHECK(rank_exact(hankel_matrix(spike)) == 1);

  // Sum of two geometric vectors, and a second-order recurrence: both rank 2.
  std::vector<Rat> secant = {Rat(2), Rat(3), Rat(5), Rat(9), Rat(17), Rat(33), Rat(65)};
  CHECK(rank_exact(hankel_matrix(secant)) == 2);
  std::vector<Rat> fib = {Rat(1), Rat(2), Rat(3), Rat(5), Rat(8), Rat(13), Rat(21)};
  CHECK(rank_exact(hankel_matrix(fib)) == 2);

  std::vector<Rat> flip = {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
  CHECK(rank_exact(hankel_matrix(flip)) == 4);

  std::vector<Rat> six(6, Rat(1));
  CHECK_THROWS_AS(hankel_matrix(six), std::invalid_argument);
}

TEST_CASE("shifted window module and its syzygy rows") {
  PDEModule m = hankel_module();
  m.validate();
  REQUIRE(m.k == 7);
  REQUIRE(m.generators.size() == 4);
  auto x4 = m.ring;
  CHECK(m.generators[1][1] == Polynomial<Rat>::variable(x4, 0));
  CHECK(m.generators[1][0].is_zero());
  CHECK(m.generators[3][6] == Polynomial<Rat>::variable(x4, 3));

  std::vector<std::vector<std::string>> rows = {
      {"x2^4 - 3*x1*x2^2*x3 + x1^2*x3^2 + 2*x1^2*x2*x4", "2*x1^2*x2*x3 - x1*x2^3 - x1^3*x4",
       "x1^2*x2^2 - x1^3*x3", "-x1^3*x2", "x1^4", "0", "0"},
      {"x2^3*x3 - 2*x1*x2*x3^2 - x1*x2^2*x4 + 2*x1^2*x3*x4",
       "x1^2*x3^2 - x1*x2^2*x3 + x1^2*x2*x4", "x1^2*x2*x3 - x1^3*x4", "-x1^3*x3", "0",
       "x1^4", "0"},
      {"x2^3*x4 - 2*x1*x2*x3*x4 + x1^2*x4^2", "-x1*x2^2*x4 + x1^2*x3*x4", "x1^2*x2*x4",
       "-x1^3*x4", "0", "0", "x1^4"},
  };
  for (const auto& row : rows) {
    std::vector<Polynomial<Rat>> b;
    for (const auto& text : row) b.push_back(parse_polynomial(text, x4));
    for (const auto& g : m.generators) {
      Polynomial<Rat> dot(x4);
      for (std::size_t j = 0; j < 7; ++j) dot += b[j] * g[j];
      CHECK(dot.is_zero());
    }
  }
}

TEST_CASE("syzygy rows produce solutions by differentiating any function") {
  PDEModule m = hankel_module();
  auto x4 = m.ring;
  auto z4 = ring_x(4, "z");
  Polynomial<Rat> f = parse_polynomial("z1^3*z2*z3*z4", z4);

  std::vector<std::string> row = {
      "x2^4 - 3*x1*x2^2*x3 + x1^2*x3^2 + 2*x1^2*x2*x4", "2*x1^2*x2*x3 - x1*x2^3 - x1^3*x4",
      "x1^2*x2^2 - x1^3*x3", "-x1^3*x2", "x1^4", "0", "0"};
  std::vector<Polynomial<Rat>> phi;
  for (const auto& text : row) {
    phi.push_back(apply_poly_diffop(parse_polynomial(text, x4), f));
  }
  CHECK(phi[0] == parse_polynomial("12*z1*z3", z4));
  CHECK(phi[1] == parse_polynomial("12*z1*z4 - 6*z2*z3", z4));
  CHECK(phi[2] == parse_polynomial("-6*z2*z4", z4));
  CHECK(phi[3] == parse_polynomial("-6*z3*z4", z4));
  CHECK(phi[4].is_zero());
  CHECK(phi[5].is_zero());
  CHECK(phi[6].is_zero());
  CHECK(is_module_solution(m, poly_vector(phi)));
}

TEST_CASE("module solution checks accept constants and reject noise") {
  PDEModule m = hankel_module();
  auto z4 = ring_x(4, "z");

  std::vector<ExpPolyFunction> constants;
  for (long v : {3, -1, 4, 1, 5, -9, 2}) {
    constants.push_back(ExpPolyFunction::polynomial(Polynomial<Rat>::constant(z4, Rat(v))));
  }
  CHECK(is_module_solution(m, constants));

  SeededRng rng(11);
  std::vector<ExpPolyFunction> noise;
  for (int j = 0; j < 7; ++j) {
    noise.push_back(ExpPolyFunction::polynomial(random_dense_poly(z4, 2, rng)));
  }
  CHECK_FALSE(is_module_solution(m, noise));

  std::vector<ExpPolyFunction> narrow(3, ExpPolyFunction::zero(z4));
  CHECK_THROWS_AS(is_module_solution(m, narrow), std::invalid_argument);

  PDEModule broken = m;
  broken.k = 0;
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  PDEModule ragged = m;
  ragged.generators[0].pop_back();
  CHECK_THROWS_AS(ragged.validate(), std::invalid_argument);
}

TEST_CASE("generator application on exponentials multiplies by frequency") {
  PDEModule m = hankel_module();
  auto z4 = ring_x(4, "z");
  std::vector<Rat> freq = {Rat(3), Rat(0), Rat(0), Rat(0)};
  std::vector<ExpPolyFunction> phi(7, ExpPolyFunction::zero(z4));
  phi[0] = ExpPolyFunction::wave(Polynomial<Rat>::constant(z4, Rat(1)), freq);

  ExpPolyFunction image = apply_module_generator(m.generators[0], phi);
  CHECK(image == ExpPolyFunction::wave(Polynomial<Rat>::constant(z4, Rat(3)), freq));

  std::vector<ExpPolyFunction> zeros(7, ExpPolyFunction::zero(z4));
  CHECK(apply_module_generator(m.generators[2], zeros).is_zero());

  std::vector<ExpPolyFunction> tooshort(2, ExpPolyFunction::zero(z4));
  CHECK_THROWS_AS(apply_module_generator(m.generators[0], tooshort), std::invalid_argument);
}

TEST_CASE("wave solutions from a rank one coefficient vector") {
  std::vector<Rat> u = {Rat(1), Rat(2), Rat(4), Rat(8), Rat(16), Rat(32), Rat(64)};
  PDEModule m = hankel_module();

  auto w3 = ring_x(3, "w");
  Polynomial<Rat> psi = parse_polynomial("w1*w2*w3", w3);
  auto phi = build_wave_solution(u, psi);
  REQUIRE(phi.size() == 7);
  CHECK(is_module_solution(m, phi));

  // The kernel description read off by hand: profiles in 2z1-z2, 2z2-z3,
  // 2z3-z4 times the coefficient vector solve the system too.
  auto z4 = ring_x(4, "z");
  Polynomial<Rat> profile = parse_polynomial("2*z1 - z2", z4) *
                            parse_polynomial("2*z2 - z3", z4) *
                            parse_polynomial("2*z3 - z4", z4);
  std::vector<ExpPolyFunction> by_hand;
  for (const Rat& c : u) by_hand.push_back(ExpPolyFunction::polynomial(profile * c));
  CHECK(is_module_solution(m, by_hand));

  Polynomial<Rat> one = Polynomial<Rat>::constant(w3, Rat(1));
  auto flat = build_wave_solution(u, one);
  for (std::size_t j = 0; j < 7; ++j) {
    CHECK(flat[j] == ExpPolyFunction::polynomial(Polynomial<Rat>::constant(z4, u[j])));
  }
  CHECK(is_module_solution(m, flat));
}

TEST_CASE("wave solutions from a rank two coefficient vector") {
  std::vector<Rat> u = {Rat(2), Rat(3), Rat(5), Rat(9), Rat(17), Rat(33), Rat(65)};
  auto w2 = ring_x(2, "w");
  Polynomial<Rat> psi = parse_polynomial("w1^2*w2 - 3*w2^2 + w1", w2);
  auto phi = build_wave_solution(u, psi);
  CHECK(is_module_solution(hankel_module(), phi));

  std::vector<Rat> flip = {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)};
  CHECK_THROWS_AS(build_wave_solution(flip, psi), std::domain_error);

  auto w3 = ring_x(3, "w");
  CHECK_THROWS_AS(build_wave_solution(u, Polynomial<Rat>::variable(w3, 0)),
                  std::invalid_argument);
}

TEST_CASE("rational combinations of solutions stay solutions") {
  PDEModule m = hankel_module();
  std::vector<Rat> u = {Rat(1), Rat(2), Rat(4), Rat(8), Rat(16), Rat(32), Rat(64)};
  std::vector<Rat> v = {Rat(1), Rat(2), Rat(3), Rat(5), Rat(8), Rat(13), Rat(21)};

  auto w3 = ring_x(3, "w");
  auto w2 = ring_x(2, "w");
  auto a = build_wave_solution(u, parse_polynomial("w1*w2*w3", w3));
  auto b = build_wave_solution(v, parse_polynomial("w1^3 - w2", w2));

  std::vector<ExpPolyFunction> combo;
  for (std::size_t j = 0; j < 7; ++j) {
    combo.push_back(a[j] * Rat(3, 2) + b[j] * Rat(-7, 3));
  }
  CHECK(is_module_solution(m, combo));
}
