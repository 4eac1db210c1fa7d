#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ffheight/rational.hpp"

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

TEST_CASE("construction reduces to lowest terms with a monic denominator") {
  FqCtx F(FieldConfig::make(3, 1));
  // (t^2+t)/t = t+1
  RationalFunction x(tpoly_from_ints(F, {0, 1, 1}), TPoly::X(F));
  CHECK(x.num() == tpoly_from_ints(F, {1, 1}));
  CHECK(x.den() == TPoly::one(F));

  // 0/(t+1) = 0/1
  RationalFunction z(TPoly::zero(F), tpoly_from_ints(F, {1, 1}));
  CHECK(z.is_zero());
  CHECK(z.den() == TPoly::one(F));

  // non-monic denominator gets rescaled: t/(2t+2) = 2t/(t+1)
  RationalFunction y(TPoly::X(F), tpoly_from_ints(F, {2, 2}));
  CHECK(y.den() == tpoly_from_ints(F, {1, 1}));
  CHECK(y.num() == tpoly_from_ints(F, {0, 2}));
}

TEST_CASE("common factors cancel in characteristic 2") {
  FqCtx F(FieldConfig::make(2, 1));
  // (t^2+1)/(t+1) = (t+1)^2/(t+1) = t+1
  RationalFunction x(tpoly_from_ints(F, {1, 0, 1}), tpoly_from_ints(F, {1, 1}));
  CHECK(x.num() == tpoly_from_ints(F, {1, 1}));
  CHECK(x.den() == TPoly::one(F));
}

TEST_CASE("zero denominator is rejected") {
  FqCtx F(FieldConfig::make(2, 1));
  try {
    RationalFunction x(TPoly::X(F), TPoly::zero(F));
    FAIL("expected throw");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Domain);
  }
  CHECK_THROWS_AS(RationalFunction::zero(F).inverse(), Error);
  CHECK_THROWS_AS(RationalFunction::t(F) / RationalFunction::zero(F), Error);
}

TEST_CASE("constant detection sees through trivial quotients") {
  FqCtx F4(FieldConfig::make(2, 2));
  CHECK(RationalFunction::constant(F4, F4.gen()).is_constant());
  CHECK(!RationalFunction::t(F4).is_constant());
  TPoly t1 = tpoly_from_ints(F4, {1, 1});
  CHECK(RationalFunction(t1, t1).is_constant());  // (t+1)/(t+1)
  CHECK(RationalFunction(t1, t1) == RationalFunction::one(F4));
  CHECK(RationalFunction::constant(F4, F4.gen()).constant_value() == F4.gen());
  CHECK_THROWS_AS(RationalFunction::t(F4).constant_value(), Error);
}

TEST_CASE("field arithmetic identities hold on random samples") {
  FqCtx F(FieldConfig::make(3, 1));
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    RationalFunction x = rand_ratfun(F, rng, 4);
    RationalFunction y = rand_ratfun(F, rng, 4);
    RationalFunction z = rand_ratfun(F, rng, 4);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == RationalFunction::one(F));
      CHECK(y / x * x == y);
    }
  }
}

TEST_CASE("pow matches repeated multiplication") {
  FqCtx F(FieldConfig::make(2, 1));
  RationalFunction x(tpoly_from_ints(F, {1, 1}), TPoly::X(F));  // (t+1)/t
  RationalFunction acc = RationalFunction::one(F);
  for (int n = 0; n <= 5; ++n) {
    CHECK(x.pow(n) == acc);
    acc = acc * x;
  }
  CHECK(x.pow(-2) == x.inverse() * x.inverse());
  CHECK(RationalFunction::zero(F).pow(0) == RationalFunction::one(F));
}

TEST_CASE("frobenius_pow is the p^s power map and is additive") {
  FqCtx F(FieldConfig::make(3, 1));
  std::mt19937 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    RationalFunction x = rand_ratfun(F, rng, 3);
    RationalFunction y = rand_ratfun(F, rng, 3);
    CHECK(x.frobenius_pow(1) == x.pow(3));
    CHECK(x.frobenius_pow(2) == x.pow(9));
    // freshman's dream
    CHECK((x + y).frobenius_pow(1) == x.frobenius_pow(1) + y.frobenius_pow(1));
  }

  FqCtx F4(FieldConfig::make(2, 2));
  RationalFunction c = RationalFunction::constant(F4, F4.gen());
  CHECK(c.frobenius_pow(1) ==
        RationalFunction::constant(F4, F4.frob(F4.gen())));
}

TEST_CASE("formatting keeps quotients compact") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK(format(RationalFunction::t(F)) == "t");
  CHECK(format(RationalFunction::zero(F)) == "0");
  RationalFunction x(tpoly_from_ints(F, {1, 1}),
                     tpoly_from_ints(F, {0, 0, 1}));
  CHECK(format(x) == "(t+1)/t^2");
  RationalFunction y(TPoly::one(F), tpoly_from_ints(F, {0, 0, 1}));
  CHECK(format(y) == "1/t^2");
}

TEST_CASE("rational functions over one field share a ring identity") {
  FqCtx F(FieldConfig::make(2, 1));
  RatFunCtx R1(F), R2(F);
  // same underlying field: values built through either context interoperate
  Poly<RatFunCtx> a = Poly<RatFunCtx>::X(R1);
  Poly<RatFunCtx> b = Poly<RatFunCtx>::X(R2);
  CHECK_NOTHROW(a + b);
  CHECK(ctx_key(R1) == ctx_key(R2));
}
