#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ffheight/heights.hpp"

using namespace ffheight;

static RationalFunction rand_ratfun(const FqCtx& F, std::mt19937& rng,
                                    int maxdeg) {
  auto draw = [&](bool nonzero) {
    for (;;) {
      int d = static_cast<int>(rng() % (maxdeg + 1));
      std::vector<Fq> v;
      for (int i = 0; i <= d; ++i)
        v.push_back(Fq{static_cast<std::uint16_t>(rng() % F.q())});
      TPoly f = TPoly::from_coeffs(F, std::move(v));
      if (!nonzero || !f.is_zero()) return f;
    }
  };
  return RationalFunction(draw(false), draw(true));
}

TEST_CASE("valuations at finite and infinite places") {
  FqCtx F(FieldConfig::make(3, 1));
  RationalFunction x(tpoly_from_ints(F, {0, 0, 1}),
                     tpoly_from_ints(F, {1, 1}));  // t^2/(t+1)
  CHECK(valuation(x, Place::finite(TPoly::X(F))) == 2);
  CHECK(valuation(x, Place::infinity(F)) == -1);
  CHECK(valuation(x, Place::finite(tpoly_from_ints(F, {1, 1}))) == -1);
  CHECK(valuation(x, Place::finite(tpoly_from_ints(F, {2, 1}))) == 0);

  FqCtx F2(FieldConfig::make(2, 1));
  RationalFunction y(tpoly_from_ints(F2, {1, 0, 1}));  // (t+1)^2
  CHECK(valuation(y, Place::finite(tpoly_from_ints(F2, {1, 1}))) == 2);
  CHECK(valuation(y, Place::infinity(F2)) == -2);

  CHECK_THROWS_AS(valuation(RationalFunction::zero(F), Place::infinity(F)),
                  Error);
}

TEST_CASE("place constructors validate the prime") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK_NOTHROW(Place::finite(tpoly_from_ints(F, {1, 1, 1})));
  CHECK_THROWS_AS(Place::finite(tpoly_from_ints(F, {1, 0, 1})), Error);  // (t+1)^2
  CHECK_THROWS_AS(Place::finite(TPoly::one(F)), Error);
  CHECK(Place::infinity(F).degree() == 1);
  CHECK(Place::finite(tpoly_from_ints(F, {1, 1, 1})).degree() == 2);
}

TEST_CASE("support is sorted and the degree-weighted sum vanishes") {
  FqCtx F(FieldConfig::make(2, 1));
  RationalFunction x(tpoly_from_ints(F, {0, 1, 1}),
                     tpoly_from_ints(F, {1, 1, 1}));  // (t^2+t)/(t^2+t+1)
  auto sup = place_support(x);
  REQUIRE(sup.size() == 3);  // t, t+1, and the degree-2 prime
  CHECK(sup[0].first == Place::finite(TPoly::X(F)));
  CHECK(sup[0].second == 1);
  CHECK(sup[1].first == Place::finite(tpoly_from_ints(F, {1, 1})));
  CHECK(sup[1].second == 1);
  CHECK(sup[2].first == Place::finite(tpoly_from_ints(F, {1, 1, 1})));
  CHECK(sup[2].second == -1);
  CHECK(std::is_sorted(sup.begin(), sup.end(), [](const auto& a, const auto& b) {
    return place_less(a.first, b.first);
  }));
  CHECK(sum_formula_check(x) == Rat(0));

  // nonzero constants have empty support
  FqCtx F7(FieldConfig::make(7, 1));
  RationalFunction c = RationalFunction::constant(F7, F7.from_int(5));
  CHECK(place_support(c).empty());
  CHECK(sum_formula_check(c) == Rat(0));
}

TEST_CASE("sum formula holds on random elements") {
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    std::mt19937 rng(static_cast<unsigned>(31 + p));
    for (int trial = 0; trial < 50; ++trial) {
      RationalFunction x = rand_ratfun(F, rng, 6);
      if (x.is_zero()) continue;
      CHECK(sum_formula_check(x) == Rat(0));
    }
  }
}

TEST_CASE("rational heights with local breakdown") {
  FqCtx F2(FieldConfig::make(2, 1));
  HeightReport hr = weil_height_rational(RationalFunction::t(F2));
  CHECK(hr.total == Rat(1));
  REQUIRE(hr.locals.size() == 1);
  CHECK(hr.locals[0].place == Place::infinity(F2));
  CHECK(hr.locals[0].h == Rat(1));

  FqCtx F3(FieldConfig::make(3, 1));
  RationalFunction x(TPoly::one(F3), tpoly_from_ints(F3, {1, 0, 1}));
  HeightReport hx = weil_height_rational(x);  // 1/(t^2+1), irreducible over F_3
  CHECK(hx.total == Rat(2));
  REQUIRE(hx.locals.size() == 1);
  CHECK(hx.locals[0].place == Place::finite(tpoly_from_ints(F3, {1, 0, 1})));
  CHECK(hx.locals[0].h == Rat(2));

  FqCtx F4(FieldConfig::make(2, 2));
  RationalFunction u = RationalFunction::constant(F4, F4.gen());
  CHECK(weil_height_rational(u).total == Rat(0));
  CHECK(weil_height_rational(u).locals.empty());
  CHECK(weil_height_rational(RationalFunction::zero(F4)).total == Rat(0));
}

TEST_CASE("place-sum equals the closed form on random elements") {
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    std::mt19937 rng(static_cast<unsigned>(41 + p));
    for (int trial = 0; trial < 50; ++trial) {
      RationalFunction x = rand_ratfun(F, rng, 6);
      Rat expect = x.is_zero()
                       ? Rat(0)
                       : Rat(std::max(x.num().deg(), x.den().deg()));
      CHECK(weil_height_rational(x).total == weil_height_closed_form(x));
      CHECK(weil_height_closed_form(x) == expect);
    }
  }
}

TEST_CASE("height is zero exactly on constants") {
  FqCtx F(FieldConfig::make(2, 2));
  std::mt19937 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    RationalFunction x = rand_ratfun(F, rng, 3);
    bool zero_height = weil_height_closed_form(x) == Rat(0);
    CHECK(zero_height == (x.is_zero() || x.is_constant()));
  }
}

TEST_CASE("frobenius scales heights by p") {
  FqCtx F(FieldConfig::make(3, 1));
  std::mt19937 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    RationalFunction x = rand_ratfun(F, rng, 4);
    CHECK(weil_height_closed_form(x.frobenius_pow(1)) ==
          Rat(3) * weil_height_closed_form(x));
  }
}

TEST_CASE("algebraic elements normalize their minimal polynomial") {
  FqCtx F(FieldConfig::make(2, 1));
  // X - t
  AlgebraicElement a = AlgebraicElement::from_minpoly(
      {tpoly_from_ints(F, {0, 1}), TPoly::one(F)});
  CHECK(a.degree() == 1);
  CHECK(weil_height_algebraic(a) == Rat(1));

  // content t and leading unit 2 are stripped: (2t^2+2t) + 2t*X -> (t+1) + X
  FqCtx F3(FieldConfig::make(3, 1));
  AlgebraicElement b = AlgebraicElement::from_minpoly(
      {tpoly_from_ints(F3, {0, 2, 2}), tpoly_from_ints(F3, {0, 2})});
  CHECK(b.coeffs[1] == TPoly::one(F3));
  CHECK(b.coeffs[0] == tpoly_from_ints(F3, {1, 1}));
  CHECK(weil_height_algebraic(b) == Rat(1));

  CHECK_THROWS_AS(AlgebraicElement::from_minpoly({TPoly::X(F)}), Error);
  CHECK_THROWS_AS(
      AlgebraicElement::from_minpoly({TPoly::X(F), TPoly::zero(F)}), Error);
}

TEST_CASE("algebraic heights divide by the degree") {
  FqCtx F3(FieldConfig::make(3, 1));
  // X^2 - t: height 1/2
  AlgebraicElement sqrt_t = AlgebraicElement::from_minpoly(
      {tpoly_from_ints(F3, {0, -1}), TPoly::zero(F3), TPoly::one(F3)});
  CHECK(weil_height_algebraic(sqrt_t) == Rat(1, 2));
  CHECK(!is_constant_element(sqrt_t));

  // X^2+X+1 over F_2: a constant-field element of height 0
  FqCtx F2(FieldConfig::make(2, 1));
  AlgebraicElement w = AlgebraicElement::from_minpoly(
      {TPoly::one(F2), TPoly::one(F2), TPoly::one(F2)});
  CHECK(weil_height_algebraic(w) == Rat(0));
  CHECK(is_constant_element(w));
}

TEST_CASE("reducible minimal polynomials are rejected up to degree 3") {
  FqCtx F(FieldConfig::make(3, 1));
  // X^2 - t^2 has the rational root t
  try {
    AlgebraicElement::from_minpoly({tpoly_from_ints(F, {0, 0, -1}),
                                    TPoly::zero(F), TPoly::one(F)});
    FAIL("expected throw");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Domain);
  }
  CHECK(minpoly_has_rational_root({tpoly_from_ints(F, {0, 0, -1}),
                                   TPoly::zero(F), TPoly::one(F)}));
  CHECK(!minpoly_has_rational_root({tpoly_from_ints(F, {0, -1}),
                                    TPoly::zero(F), TPoly::one(F)}));
}

TEST_CASE("monic divisors enumerate the divisor lattice") {
  FqCtx F(FieldConfig::make(2, 1));
  // t^2 * (t+1): 6 monic divisors
  TPoly f = TPoly::X(F) * TPoly::X(F) * tpoly_from_ints(F, {1, 1});
  auto divs = monic_divisors(f);
  CHECK(divs.size() == 6);
  for (const TPoly& d : divs) CHECK((f % d).is_zero());
  CHECK(monic_divisors(TPoly::one(F)).size() == 1);
}

TEST_CASE("point heights add over coordinates") {
  FqCtx F(FieldConfig::make(2, 1));
  RationalFunction t = RationalFunction::t(F);
  CHECK(height_point({Coordinate(t), Coordinate(t.inverse())}) == Rat(2));

  FqCtx F4(FieldConfig::make(2, 2));
  Coordinate u = RationalFunction::constant(F4, F4.gen());
  Coordinate u1 =
      RationalFunction::constant(F4, F4.add(F4.gen(), F4.one()));
  CHECK(height_point({u, u1}) == Rat(0));

  FqCtx F3(FieldConfig::make(3, 1));
  AlgebraicElement sqrt_t = AlgebraicElement::from_minpoly(
      {tpoly_from_ints(F3, {0, -1}), TPoly::zero(F3), TPoly::one(F3)});
  CHECK(height_point({Coordinate(RationalFunction::t(F3)),
                      Coordinate(sqrt_t)}) == Rat(3, 2));
  CHECK(coordinate_height(Coordinate(sqrt_t)) == Rat(1, 2));
}

TEST_CASE("triangle inequality holds with exact bookkeeping") {
  FqCtx F(FieldConfig::make(2, 1));
  RationalFunction t = RationalFunction::t(F);
  TriangleReport tr = triangle_check(t, t.inverse());
  CHECK(tr.holds);
  CHECK(tr.hx == Rat(1));
  CHECK(tr.hy == Rat(1));
  CHECK(tr.hsum == Rat(2));  // h((t^2+1)/t) = 2: equality case

  // cancellation case: h(x + (-x)) = 0
  TriangleReport tc = triangle_check(t, -t);
  CHECK(tc.holds);
  CHECK(tc.hsum == Rat(0));

  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(triangle_check(rand_ratfun(F, rng, 5), rand_ratfun(F, rng, 5)).holds);
  }
}
