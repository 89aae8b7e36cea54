#include <doctest.h>

#include <random>

#include "smoothred/subring.hpp"
#include "test_util.hpp"

using namespace smoothred;
using testutil::P;

TEST_CASE("ring_add canonical examples") {
  auto qq = RingDescriptor::rationals();
  CHECK(RingElement::from_rational(qq, Rat(1, 2)) + RingElement::from_rational(qq, Rat(1, 2)) ==
        RingElement::one(qq));

  auto f7 = RingDescriptor::integers_mod(7);
  CHECK(RingElement::from_int(f7, 5) + RingElement::from_int(f7, 4) ==
        RingElement::from_int(f7, 2));

  auto tv = make_vars({"t"});
  auto rel = P("t^2 + 1", qq, tv);
  auto gauss = RingDescriptor::polynomial_quotient(qq, {"t"}, {rel});
  RingElement t = RingElement::quotient_class(gauss, Poly::variable(qq, tv, 0));
  CHECK((t + t).to_string() == "2*t");
}

TEST_CASE("ring_mul canonical examples") {
  auto qq = RingDescriptor::rationals();
  auto tv = make_vars({"t"});
  auto gauss = RingDescriptor::polynomial_quotient(qq, {"t"}, {P("t^2 + 1", qq, tv)});
  RingElement t = RingElement::quotient_class(gauss, Poly::variable(qq, tv, 0));
  CHECK(t * t == RingElement::from_int(gauss, -1));

  auto zz = RingDescriptor::integers();
  Int big = Int(1) << 100;
  RingElement b = RingElement::from_int(zz, big);
  CHECK((b * b).int_value() == Int(1) << 200);

  RingElement q = RingElement::from_rational(qq, Rat(-1, 4));
  CHECK(q * q == RingElement::from_rational(qq, Rat(1, 16)));
}

TEST_CASE("ring_inverse") {
  auto qq = RingDescriptor::rationals();
  auto inv4 = ring_inverse(RingElement::from_int(qq, 4));
  REQUIRE(inv4.status == InverseStatus::Unit);
  CHECK(*inv4.value == RingElement::from_rational(qq, Rat(1, 4)));

  auto zz = RingDescriptor::integers();
  CHECK(ring_inverse(RingElement::from_int(zz, 2)).status == InverseStatus::NonUnit);

  auto z9 = RingDescriptor::integers_mod(9);
  CHECK(ring_inverse(RingElement::from_int(z9, 3)).status == InverseStatus::NonUnit);
  auto inv2 = ring_inverse(RingElement::from_int(z9, 2));
  REQUIRE(inv2.status == InverseStatus::Unit);
  CHECK(*inv2.value == RingElement::from_int(z9, 5));

  // t is a unit in QQ[t]/(t^2+1): t * (-t) = 1.
  auto tv = make_vars({"t"});
  auto gauss = RingDescriptor::polynomial_quotient(qq, {"t"}, {P("t^2 + 1", qq, tv)});
  RingElement t = RingElement::quotient_class(gauss, Poly::variable(qq, tv, 0));
  auto invt = ring_inverse(t);
  REQUIRE(invt.status == InverseStatus::Unit);
  CHECK(t * *invt.value == RingElement::one(gauss));
}

TEST_CASE("descriptor mismatch is rejected") {
  auto qq = RingDescriptor::rationals();
  auto zz = RingDescriptor::integers();
  CHECK_THROWS_AS(RingElement::one(qq) + RingElement::one(zz), std::invalid_argument);
}

TEST_CASE("descriptor invariants") {
  CHECK_THROWS_AS(RingDescriptor::integers_mod(1), std::invalid_argument);
  auto qq = RingDescriptor::rationals();
  auto tv = make_vars({"t"});
  CHECK_THROWS_AS(
      RingDescriptor::polynomial_quotient(qq, {"t"}, {Poly::zero(qq, tv)}),
      std::invalid_argument);
  // Non-monic relator over ZZ rejected.
  auto zz = RingDescriptor::integers();
  CHECK_THROWS_AS(RingDescriptor::polynomial_quotient(zz, {"t"}, {P("2*t^2 - 1", zz, tv)}),
                  UnsupportedCoefficientRing);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> d(-50, 50);
  std::vector<RingPtr> rings = {RingDescriptor::integers(), RingDescriptor::rationals(),
                                RingDescriptor::integers_mod(12),
                                RingDescriptor::integers_mod(101)};
  auto qq = RingDescriptor::rationals();
  auto tv = make_vars({"t"});
  rings.push_back(RingDescriptor::polynomial_quotient(qq, {"t"}, {P("t^2 + 1", qq, tv)}));

  for (auto& ring : rings) {
    auto sample = [&]() {
      RingElement e = RingElement::from_int(ring, d(rng));
      if (ring->kind() == RingKind::PolynomialQuotient) {
        const auto& q = ring->quotient();
        e = e + RingElement::quotient_class(
                    ring, Poly::variable(q.base, q.vars, 0)
                              .scaled(RingElement::from_int(q.base, d(rng))));
      }
      return e;
    };
    for (int i = 0; i < 40; ++i) {
      RingElement a = sample(), b = sample(), c = sample();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + RingElement::zero(ring) == a);
      CHECK(a * RingElement::one(ring) == a);
      CHECK(a + (-a) == RingElement::zero(ring));
      auto inv = ring_inverse(a);
      if (inv.status == InverseStatus::Unit) CHECK(a * *inv.value == RingElement::one(ring));
    }
  }
}

TEST_CASE("subring_generated: empty generation is the prime subring") {
  auto qq = RingDescriptor::rationals();
  auto view = SubringView::generated(qq, {});
  CHECK(view->generator_count() == 0);
  SubringElement five = SubringElement::from_int(view, 5);
  CHECK(five.image() == RingElement::from_int(qq, 5));
  CHECK(five.invariant_holds());
}

TEST_CASE("subring_generated: the x^2-2 coefficient subring") {
  auto qq = RingDescriptor::rationals();
  std::vector<RingElement> gens = {
      RingElement::from_rational(qq, Rat(-1, 4)), RingElement::from_rational(qq, Rat(1, 16)),
      RingElement::from_rational(qq, Rat(-1, 2)), RingElement::one(qq),
      RingElement::from_int(qq, -2)};
  auto view = SubringView::generated(qq, gens);
  CHECK(view->generator_count() == 5);
  // Each listed generator is witnessed by a single symbol.
  for (size_t i = 0; i < gens.size(); ++i) {
    SubringElement ci = SubringElement::generator(view, i);
    CHECK(ci.expr().size() == 1);
    CHECK(ci.image() == gens[i]);
    CHECK(ci.invariant_holds());
  }
  // 1/4 = (-1/4) * (-1) where -1 = (-1/4) * (-2) * (-2) ... just check a
  // product expression evaluates consistently.
  SubringElement c1 = SubringElement::generator(view, 0);
  SubringElement c5 = SubringElement::generator(view, 4);
  SubringElement prod = c1 * c5 * c5;  // (-1/4)*(-2)*(-2) = -1
  CHECK(prod.image() == RingElement::from_int(qq, -1));
  CHECK((c1 * prod).image() == RingElement::from_rational(qq, Rat(1, 4)));
  CHECK((c1 * prod).invariant_holds());
}

TEST_CASE("subring_generated: dedup and ZZ ambient") {
  auto zz = RingDescriptor::integers();
  auto view = SubringView::generated(
      zz, {RingElement::from_int(zz, 5), RingElement::from_int(zz, 5)});
  CHECK(view->generator_count() == 1);
  SubringElement c1 = SubringElement::generator(view, 0);
  CHECK((c1 * c1 - SubringElement::from_int(view, 25)).is_zero());
}

TEST_CASE("subring arithmetic commutes with evaluation") {
  std::mt19937 rng(7);
  auto qq = RingDescriptor::rationals();
  std::vector<RingElement> gens = {RingElement::from_rational(qq, Rat(2, 3)),
                                   RingElement::from_int(qq, -5),
                                   RingElement::from_rational(qq, Rat(1, 7))};
  auto view = SubringView::generated(qq, gens);
  std::uniform_int_distribution<int> pick(0, 3), coin(0, 1), ci(-4, 4);
  auto leaf = [&]() {
    int p = pick(rng);
    if (p == 3) return SubringElement::from_int(view, ci(rng));
    return SubringElement::generator(view, static_cast<size_t>(p));
  };
  for (int i = 0; i < 200; ++i) {
    SubringElement a = leaf(), b = leaf(), c = leaf();
    SubringElement e = coin(rng) ? (a + b) * c : a * b - c;
    CHECK(e.invariant_holds());
    CHECK(e.evaluate() == e.image());
  }
}
