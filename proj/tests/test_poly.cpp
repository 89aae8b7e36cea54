#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace smoothred;
using testutil::P;

namespace {
const RingPtr qq = RingDescriptor::rationals();
const RingPtr zz = RingDescriptor::integers();
}  // namespace

TEST_CASE("poly arithmetic examples") {
  auto xy = make_vars({"x", "y"});
  CHECK(P("x*y - 1", qq, xy) + P("1", qq, xy) == P("x*y", qq, xy));

  auto xv = make_vars({"x"});
  CHECK(P("x^2 - 2", qq, xv) * P("x^2 - 2", qq, xv) == P("x^4 - 4*x^2 + 4", qq, xv));

  Poly p = P("3*x^2*y - y + 7", qq, xy);
  CHECK((p + (-p)).is_zero());
  CHECK((p + (-p)).terms().empty());
}

TEST_CASE("context mismatch rejected") {
  auto xy = make_vars({"x", "y"});
  auto xv = make_vars({"x"});
  CHECK_THROWS_AS(P("x", qq, xy) + P("x", qq, xv), std::invalid_argument);
  CHECK_THROWS_AS(P("x", qq, xv) * P("x", zz, xv), std::invalid_argument);
}

TEST_CASE("substitute examples") {
  auto xy = make_vars({"x", "y"});
  Poly f = P("x*y - 1", qq, xy);
  std::vector<Poly> im = {P("x - x*(x*y - 1)", qq, xy), P("y", qq, xy)};
  CHECK(substitute(f, im) == P("-(x*y - 1)^2", qq, xy));
  CHECK(substitute(f, im) == P("-x^2*y^2 + 2*x*y - 1", qq, xy));

  auto xv = make_vars({"x"});
  Poly g = P("x^2 - 2", qq, xv);
  std::vector<Poly> im2 = {P("x - (x^3 - 2*x)/4", qq, xv)};
  CHECK(substitute(g, im2) == P("(x^2/16 - 1/2)*(x^2 - 2)^2", qq, xv));

  std::vector<Poly> id = {P("x", qq, xy), P("y", qq, xy)};
  Poly any = P("5*x^3*y - 2*y^2 + 1/3", qq, xy);
  CHECK(substitute(any, id) == any);
}

TEST_CASE("hasse_derivative examples") {
  auto xv = make_vars({"x"});
  CHECK(hasse_derivative(P("x^2", qq, xv), Monomial({2})) == P("1", qq, xv));
  CHECK(hasse_derivative(P("x^3", qq, xv), Monomial({2})) == P("3*x", qq, xv));
  auto xy = make_vars({"x", "y"});
  CHECK(hasse_derivative(P("x*y", qq, xy), Monomial({1, 1})) == P("1", qq, xy));
}

TEST_CASE("taylor_shift examples") {
  auto xv = make_vars({"x"});
  Poly p = P("x^2", qq, xv);
  Poly g = P("x^3 - 1", qq, xv);
  auto tc = taylor_shift(p, {g});
  REQUIRE(tc.size() == 3);
  CHECK(tc[0].alpha == Monomial({0}));
  CHECK(tc[0].derivative == p);
  CHECK(tc[1].derivative == P("2*x", qq, xv));
  CHECK(tc[1].shift_power == g);
  CHECK(tc[2].derivative == P("1", qq, xv));
  CHECK(tc[2].shift_power == g * g);

  auto xy = make_vars({"x", "y"});
  Poly f = P("x*y - 1", qq, xy);
  Poly gg = P("x^2 + y", qq, xy);
  auto tc2 = taylor_shift(f, {gg, Poly::zero(qq, xy)});
  REQUIRE(tc2.size() == 2);
  CHECK(tc2[0].derivative == f);
  CHECK(tc2[1].alpha == Monomial({1, 0}));
  CHECK(tc2[1].derivative == P("y", qq, xy));
  CHECK(tc2[1].shift_power == gg);

  auto tc3 = taylor_shift(f, {Poly::zero(qq, xy), Poly::zero(qq, xy)});
  REQUIRE(tc3.size() == 1);
  CHECK(tc3[0].derivative == f);
}

TEST_CASE("coefficients_of") {
  auto xy = make_vars({"x", "y"});
  auto cs = P("x*y - 1", qq, xy).coefficients();
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == RingElement::one(qq));
  CHECK(cs[1] == RingElement::from_int(qq, -1));

  auto xv = make_vars({"x"});
  auto cs2 = P("x^2/16 - 1/2", qq, xv).coefficients();
  REQUIRE(cs2.size() == 2);
  CHECK(cs2[0] == RingElement::from_rational(qq, Rat(1, 16)));
  CHECK(cs2[1] == RingElement::from_rational(qq, Rat(-1, 2)));

  CHECK(Poly::zero(qq, xv).coefficients().empty());
}

TEST_CASE("Taylor identity on random instances over ZZ and F_p") {
  std::mt19937 rng(2024);
  for (auto& ring : {zz, RingDescriptor::integers_mod(5), RingDescriptor::integers_mod(7)}) {
    auto vars = make_vars({"x", "y"});
    for (int it = 0; it < 60; ++it) {
      Poly p = testutil::random_poly(rng, ring, vars, 4, 4);
      std::vector<Poly> shifts = {testutil::random_poly(rng, ring, vars, 2, 2),
                                  testutil::random_poly(rng, ring, vars, 2, 2)};
      // taylor_shift checks the identity internally and throws on failure.
      auto tc = taylor_shift(p, shifts);
      Poly sum = Poly::zero(ring, vars);
      for (auto& c : tc) sum = sum + c.derivative * c.shift_power;
      std::vector<Poly> xplus = {Poly::variable(ring, vars, 0) + shifts[0],
                                 Poly::variable(ring, vars, 1) + shifts[1]};
      CHECK(sum == substitute(p, xplus));
    }
  }
}

TEST_CASE("substitute is a ring homomorphism in p") {
  std::mt19937 rng(99);
  auto vars = make_vars({"x", "y"});
  for (int it = 0; it < 50; ++it) {
    Poly p = testutil::random_poly(rng, qq, vars, 3, 3);
    Poly q = testutil::random_poly(rng, qq, vars, 3, 3);
    std::vector<Poly> im = {testutil::random_poly(rng, qq, vars, 2, 2),
                            testutil::random_poly(rng, qq, vars, 2, 2)};
    CHECK(substitute(p * q, im) == substitute(p, im) * substitute(q, im));
    CHECK(substitute(p + q, im) == substitute(p, im) + substitute(q, im));
  }
}

TEST_CASE("coefficients reconstruct the polynomial") {
  std::mt19937 rng(5);
  auto vars = make_vars({"x", "y", "z"});
  for (int it = 0; it < 40; ++it) {
    Poly p = testutil::random_poly(rng, qq, vars, 4, 5);
    CHECK(p.coefficients().empty() == p.is_zero());
    Poly rebuilt = Poly::zero(qq, vars);
    for (auto& [m, c] : p.terms()) rebuilt.add_term(m, c);
    CHECK(rebuilt == p);
  }
}
