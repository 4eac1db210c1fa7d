#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ffheight/parse.hpp"

using namespace ffheight;

TEST_CASE("rational functions parse and normalize") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK(parse_rational(F, "t") == RationalFunction::t(F));
  CHECK(parse_rational(F, " t + 1 ") ==
        RationalFunction(tpoly_from_ints(F, {1, 1})));
  CHECK(parse_rational(F, "(t^2+t)/(t+1)") == RationalFunction::t(F));
  CHECK(parse_rational(F, "(t+1)/t^2") ==
        RationalFunction(tpoly_from_ints(F, {1, 1}),
                         tpoly_from_ints(F, {0, 0, 1})));
  CHECK(parse_rational(F, "1/t + 1") ==
        RationalFunction(tpoly_from_ints(F, {1, 1}), TPoly::X(F)));
  CHECK(parse_rational(F, "0") == RationalFunction::zero(F));
  CHECK(parse_rational(F, "t*t*t") ==
        RationalFunction(tpoly_from_ints(F, {0, 0, 0, 1})));
}

TEST_CASE("signs and integer literals reduce modulo p") {
  FqCtx F(FieldConfig::make(3, 1));
  CHECK(parse_rational(F, "-t+2") ==
        RationalFunction(tpoly_from_ints(F, {2, 2})));
  CHECK(parse_rational(F, "5") ==
        RationalFunction::constant(F, F.from_int(2)));
  CHECK(parse_rational(F, "-t^2") ==
        RationalFunction(tpoly_from_ints(F, {0, 0, 2})));
  CHECK(parse_rational(F, "2*t+3*t") ==
        RationalFunction(tpoly_from_ints(F, {0, 2})));
  CHECK(parse_rational(F, "t-t").is_zero());
}

TEST_CASE("the generator u parses only in proper extensions") {
  FqCtx F4(FieldConfig::make(2, 2));
  CHECK(parse_rational(F4, "u") ==
        RationalFunction::constant(F4, F4.gen()));
  CHECK(parse_rational(F4, "u^2") ==
        RationalFunction::constant(F4, F4.mul(F4.gen(), F4.gen())));
  CHECK(parse_rational(F4, "(u+1)*t") ==
        RationalFunction(TPoly::from_coeffs(
            F4, {F4.zero(), F4.add(F4.gen(), F4.one())})));

  FqCtx F2(FieldConfig::make(2, 1));
  CHECK_THROWS_AS(parse_rational(F2, "u+1"), ParseError);
}

TEST_CASE("format and parse are mutually inverse on rationals") {
  FqCtx F(FieldConfig::make(3, 1));
  for (const char* src :
       {"t^3+2*t+1", "(t+2)/(t^2+1)", "2*t^2+t", "1/t^2", "2"}) {
    RationalFunction x = parse_rational(F, src);
    CHECK(format(x) == src);
    CHECK(parse_rational(F, format(x)) == x);
  }
}

TEST_CASE("polynomial entry rejects true fractions") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK(parse_poly(F, "t^2+t") == tpoly_from_ints(F, {0, 1, 1}));
  // quotients that normalize to polynomials are fine
  CHECK(parse_poly(F, "(t^2+t)/t") == tpoly_from_ints(F, {1, 1}));
  CHECK_THROWS_AS(parse_poly(F, "1/t"), Error);
}

TEST_CASE("twisted polynomials with coefficient commutation") {
  FqCtx F(FieldConfig::make(2, 1));
  TwistedPoly f = parse_twisted(F, "t*tau + tau^3", 1);
  CHECK(f.deg_tau() == 3);
  CHECK(f.get(1) == RationalFunction::t(F));
  CHECK(f.get(3) == RationalFunction::one(F));
  CHECK(f.get(0).is_zero());
  CHECK(format(f) == "t*tau + tau^3");

  // tau * t = t^2 * tau when q_tau = 2
  TwistedPoly g = parse_twisted(F, "tau*t", 1);
  CHECK(g.get(1) == RationalFunction::t(F).pow(2));
  CHECK(format(g) == "t^2*tau");

  // rational coefficients must be parenthesized
  TwistedPoly h = parse_twisted(F, "(1/t)*tau", 1);
  CHECK(h.get(1) == RationalFunction::t(F).inverse());
  CHECK(format(h) == "(1/t)*tau");

  // tau^0 terms are bare coefficients
  TwistedPoly k = parse_twisted(F, "tau + t", 1);
  CHECK(k.get(0) == RationalFunction::t(F));
  CHECK(format(k) == "t + tau");
}

TEST_CASE("twist exponent changes the commutation power") {
  FqCtx F4(FieldConfig::make(2, 2));
  TwistedPoly s1 = parse_twisted(F4, "tau*u", 1);
  CHECK(s1.get(1) == RationalFunction::constant(F4, F4.frob(F4.gen())));
  TwistedPoly s2 = parse_twisted(F4, "tau*u", 2);
  CHECK(s2.get(1) == RationalFunction::constant(F4, F4.gen()));  // u^4 = u
}

TEST_CASE("multivariate polynomials infer their variable count") {
  FqCtx F(FieldConfig::make(2, 1));
  MultiPoly f = parse_multi(F, "X1 + X2 + t");
  CHECK(f.nvars() == 2);
  CHECK(f.total_degree() == 1);
  CHECK(format(f) == "X1 + X2 + t");

  MultiPoly g = parse_multi(F, "t*X1^2*X2 + (t^2+1)*X2 + 1");
  CHECK(g.nvars() == 2);
  CHECK(g.deg_in(0) == 2);
  CHECK(format(g) == "t*X1^2*X2 + (t^2+1)*X2 + 1");
  CHECK(parse_multi(F, format(g)) == g);

  MultiPoly h = parse_multi(F, "X3");
  CHECK(h.nvars() == 3);
}

TEST_CASE("element parsing infers the domain from the symbols") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK(std::holds_alternative<RationalFunction>(
      parse_element(F, "t+1", 1)));
  CHECK(std::holds_alternative<TwistedPoly>(parse_element(F, "tau", 1)));
  CHECK(std::holds_alternative<MultiPoly>(parse_element(F, "X1", 1)));
  CHECK(std::holds_alternative<RationalFunction>(parse_element(F, "7", 1)));
}

TEST_CASE("division placement is policed outside rational sources") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK_THROWS_AS(parse_twisted(F, "1/t + tau", 1), ParseError);
  CHECK_THROWS_AS(parse_multi(F, "X1/t"), ParseError);
  CHECK_NOTHROW(parse_multi(F, "(1/t)*X1"));
  try {
    parse_twisted(F, "1/t + tau", 1);
    FAIL("expected throw");
  } catch (const ParseError& err) {
    CHECK(err.position() == 1);
    CHECK(std::string(err.what()).find("(at position 1)") != std::string::npos);
  }
}

TEST_CASE("mixing tau with X variables is rejected") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK_THROWS_AS(parse_element(F, "tau + X1", 1), ParseError);
  CHECK_THROWS_AS(parse_element(F, "X1*tau", 1), ParseError);
}

TEST_CASE("parse errors carry their position") {
  FqCtx F(FieldConfig::make(2, 1));
  try {
    parse_rational(F, "t + ");
    FAIL("expected throw");
  } catch (const ParseError& err) {
    CHECK(err.position() == 4);
  }
  try {
    parse_rational(F, "t + %");
    FAIL("expected throw");
  } catch (const ParseError& err) {
    CHECK(err.position() == 4);
  }
  try {
    parse_rational(F, "(t+1");
    FAIL("expected throw");
  } catch (const ParseError& err) {
    CHECK(err.kind() == ErrorKind::Parse);
  }
  CHECK_THROWS_AS(parse_rational(F, ""), ParseError);
  CHECK_THROWS_AS(parse_rational(F, "t t"), ParseError);
}

TEST_CASE("guardrails on exponents and variable indices") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK_THROWS_AS(parse_rational(F, "t^100000"), ParseError);
  CHECK_THROWS_AS(parse_multi(F, "X0"), ParseError);
  CHECK_THROWS_AS(parse_multi(F, "X65"), ParseError);
  CHECK_THROWS_AS(parse_rational(F, "t^-1"), ParseError);
  CHECK_NOTHROW(parse_rational(F, "t^31"));
}

TEST_CASE("division by a zero denominator is reported at the slash") {
  FqCtx F(FieldConfig::make(2, 1));
  try {
    parse_rational(F, "t/(t+t)");
    FAIL("expected throw");
  } catch (const ParseError& err) {
    CHECK(err.position() == 1);
    CHECK(std::string(err.what()).find("division by zero") !=
          std::string::npos);
  }
}
