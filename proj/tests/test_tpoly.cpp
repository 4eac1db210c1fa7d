#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "ffheight/tpoly.hpp"

using namespace ffheight;

static TPoly rand_tpoly(const FqCtx& F, std::mt19937& rng, int maxdeg,
                        bool nonzero) {
  for (;;) {
    int d = static_cast<int>(rng() % (maxdeg + 1));
    std::vector<Fq> v;
    for (int i = 0; i <= d; ++i)
      v.push_back(Fq{static_cast<std::uint16_t>(rng() % F.q())});
    TPoly f = TPoly::from_coeffs(F, std::move(v));
    if (!nonzero || !f.is_zero()) return f;
  }
}

// (degree, then coefficients top-down) — the documented factor ordering.
static bool factor_sorted(const Factorization& fz) {
  for (size_t i = 1; i < fz.factors.size(); ++i) {
    const TPoly& a = fz.factors[i - 1].prime;
    const TPoly& b = fz.factors[i].prime;
    if (!poly_less(a, b)) return false;
  }
  return true;
}

static TPoly remultiply(const FqCtx& F, const Factorization& fz) {
  TPoly out = TPoly::constant(F, fz.unit);
  for (const FactorItem& it : fz.factors)
    out = out * poly_pow(it.prime, it.multiplicity);
  return out;
}

TEST_CASE("factor splits squares of primes") {
  FqCtx F(FieldConfig::make(2, 1));
  TPoly f = tpoly_from_ints(F, {1, 0, 1});  // t^2+1 = (t+1)^2
  Factorization fz = factor(f);
  REQUIRE(fz.factors.size() == 1);
  CHECK(fz.factors[0].prime == tpoly_from_ints(F, {1, 1}));
  CHECK(fz.factors[0].multiplicity == 2);
  CHECK(fz.unit == F.one());
}

TEST_CASE("factor leaves irreducibles alone") {
  FqCtx F(FieldConfig::make(2, 1));
  TPoly f = tpoly_from_ints(F, {1, 1, 1});  // t^2+t+1
  Factorization fz = factor(f);
  REQUIRE(fz.factors.size() == 1);
  CHECK(fz.factors[0].prime == f);
  CHECK(fz.factors[0].multiplicity == 1);
}

TEST_CASE("factor splits t^3 - t over F_3 into linears") {
  FqCtx F(FieldConfig::make(3, 1));
  TPoly f = tpoly_from_ints(F, {0, -1, 0, 1});  // t^3 - t
  Factorization fz = factor(f);
  REQUIRE(fz.factors.size() == 3);
  CHECK(fz.factors[0].prime == tpoly_from_ints(F, {0, 1}));  // t
  CHECK(fz.factors[1].prime == tpoly_from_ints(F, {1, 1}));  // t+1
  CHECK(fz.factors[2].prime == tpoly_from_ints(F, {2, 1}));  // t+2
  for (const FactorItem& it : fz.factors) CHECK(it.multiplicity == 1);
}

TEST_CASE("factor extracts the unit") {
  FqCtx F(FieldConfig::make(3, 1));
  TPoly f = tpoly_from_ints(F, {0, 2, 2});  // 2t^2+2t = 2 * t * (t+1)
  Factorization fz = factor(f);
  CHECK(fz.unit == F.from_int(2));
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].prime == tpoly_from_ints(F, {0, 1}));
  CHECK(fz.factors[1].prime == tpoly_from_ints(F, {1, 1}));
}

TEST_CASE("factor handles zero-derivative input via p-th roots") {
  FqCtx F(FieldConfig::make(2, 1));
  TPoly f = tpoly_from_ints(F, {1, 0, 1, 0, 1});  // t^4+t^2+1 = (t^2+t+1)^2
  Factorization fz = factor(f);
  REQUIRE(fz.factors.size() == 1);
  CHECK(fz.factors[0].prime == tpoly_from_ints(F, {1, 1, 1}));
  CHECK(fz.factors[0].multiplicity == 2);
}

TEST_CASE("factor rejects zero and accepts constants") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK_THROWS_AS(factor(TPoly::zero(F)), Error);
  Factorization fz = factor(TPoly::one(F));
  CHECK(fz.factors.empty());
  CHECK(fz.unit == F.one());
}

TEST_CASE("factorization is multiplicative and re-multiplies") {
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    std::mt19937 rng(static_cast<unsigned>(100 + p));
    for (int trial = 0; trial < 100; ++trial) {
      TPoly f = rand_tpoly(F, rng, 8, true);
      TPoly g = rand_tpoly(F, rng, 8, true);
      Factorization ff = factor(f), fg = factor(g), ffg = factor(f * g);
      CHECK(factor_sorted(ffg));
      CHECK(remultiply(F, ff) == f);
      CHECK(remultiply(F, ffg) == f * g);
      // multiset of (prime, multiplicity) adds under multiplication
      std::map<std::string, int> merged, together;
      for (const FactorItem& it : ff.factors)
        merged[format(it.prime)] += it.multiplicity;
      for (const FactorItem& it : fg.factors)
        merged[format(it.prime)] += it.multiplicity;
      for (const FactorItem& it : ffg.factors)
        together[format(it.prime)] += it.multiplicity;
      CHECK(merged == together);
      CHECK(F.mul(ff.unit, fg.unit) == ffg.unit);
    }
  }
}

TEST_CASE("factor output is deterministic") {
  FqCtx F(FieldConfig::make(3, 1));
  TPoly f = tpoly_from_ints(F, {2, 1, 0, 2, 1, 1});
  Factorization a = factor(f), b = factor(f);
  REQUIRE(a.factors.size() == b.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].prime == b.factors[i].prime);
    CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
  }
}

TEST_CASE("is_irreducible on small cases") {
  FqCtx F(FieldConfig::make(2, 1));
  CHECK(is_irreducible(tpoly_from_ints(F, {1, 1, 0, 0, 1})));   // t^4+t+1
  CHECK(!is_irreducible(tpoly_from_ints(F, {1, 0, 1, 0, 1})));  // (t^2+t+1)^2
  CHECK(is_irreducible(TPoly::X(F)));
  CHECK(!is_irreducible(tpoly_from_ints(F, {1, 0, 1})));        // (t+1)^2
}

TEST_CASE("ord_at counts prime multiplicity") {
  FqCtx F(FieldConfig::make(2, 1));
  TPoly tp1 = tpoly_from_ints(F, {1, 1});
  CHECK(ord_at(tpoly_from_ints(F, {1, 0, 1}), tp1) == 2);
  CHECK(ord_at(tpoly_from_ints(F, {1, 1, 1}), tp1) == 0);
  CHECK(ord_at(tpoly_from_ints(F, {0, 0, 0, 1}), TPoly::X(F)) == 3);
}

TEST_CASE("division leaves a small remainder") {
  FqCtx F(FieldConfig::make(3, 1));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    TPoly a = rand_tpoly(F, rng, 8, false);
    TPoly b = rand_tpoly(F, rng, 5, true);
    auto [q, r] = divmod(a, b);
    CHECK(a == q * b + r);
    CHECK(r.deg() < b.deg());
  }
  CHECK_THROWS_AS(divmod(TPoly::X(F), TPoly::zero(F)), Error);
}

TEST_CASE("gcd is monic and correct") {
  FqCtx F(FieldConfig::make(2, 1));
  TPoly g = poly_gcd(tpoly_from_ints(F, {0, 1, 1}),   // t(t+1)
                     tpoly_from_ints(F, {1, 0, 1}));  // (t+1)^2
  CHECK(g == tpoly_from_ints(F, {1, 1}));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    TPoly a = rand_tpoly(F, rng, 6, true);
    TPoly b = rand_tpoly(F, rng, 6, true);
    auto [d, s, t] = poly_xgcd(a, b);
    CHECK(s * a + t * b == d);
    CHECK((a % d).is_zero());
    CHECK((b % d).is_zero());
  }
}

TEST_CASE("degree is additive under multiplication") {
  FqCtx F(FieldConfig::make(5, 1));
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    TPoly a = rand_tpoly(F, rng, 6, true);
    TPoly b = rand_tpoly(F, rng, 6, true);
    CHECK((a * b).deg() == a.deg() + b.deg());
  }
}

TEST_CASE("coefficient frobenius and p-th powers") {
  FqCtx F(FieldConfig::make(2, 2));
  Fq u = F.gen();
  TPoly f = TPoly::from_coeffs(F, {F.one(), u});  // u*t + 1
  TPoly cf = coeff_frobenius(f, 1);
  CHECK(cf.get(1) == F.frob(u));
  CHECK(cf.get(0) == F.one());

  // f^(p^s) spreads exponents and twists coefficients
  TPoly sq = tpoly_pth_power(f, 1);
  CHECK(sq == f * f);
  CHECK(tpoly_pth_root(sq) == f);
  CHECK(tpoly_pth_power(f, 2) == f * f * f * f);
}

TEST_CASE("enumeration helpers cover monic polynomials") {
  FqCtx F(FieldConfig::make(2, 1));
  auto quads = monic_polys_of_degree(F, 2);
  CHECK(quads.size() == 4);
  for (const TPoly& f : quads) {
    CHECK(f.deg() == 2);
    CHECK(f.lc() == F.one());
  }

  FqCtx F3(FieldConfig::make(3, 1));
  for (long long idx = 0; idx < 27; ++idx) {
    TPoly f = tpoly_from_index(F3, idx, 3);
    CHECK(tpoly_to_index(f, 3) == idx);
  }
}

TEST_CASE("polynomial formatting") {
  FqCtx F3(FieldConfig::make(3, 1));
  CHECK(format(tpoly_from_ints(F3, {2, 2, 0, 1})) == "t^3+2*t+2");
  CHECK(format(TPoly::zero(F3)) == "0");
  CHECK(format(TPoly::constant(F3, F3.from_int(2))) == "2");
  CHECK(format(TPoly::X(F3)) == "t");

  FqCtx F4(FieldConfig::make(2, 2));
  Fq u = F4.gen();
  TPoly f = TPoly::from_coeffs(F4, {F4.zero(), u, F4.one()});
  CHECK(format(f) == "t^2+u*t");
  TPoly g = TPoly::from_coeffs(F4, {F4.zero(), F4.add(u, F4.one())});
  CHECK(format(g) == "(u+1)*t");
  CHECK(format_var(tpoly_from_ints(F3, {0, 1, 1}), "X") == "X^2+X");
}

TEST_CASE("poly_less orders by degree then top coefficients") {
  FqCtx F(FieldConfig::make(2, 1));
  TPoly t = TPoly::X(F);
  TPoly t1 = tpoly_from_ints(F, {1, 1});
  TPoly t2 = tpoly_from_ints(F, {0, 0, 1});
  CHECK(poly_less(t, t1));
  CHECK(poly_less(t1, t2));
  CHECK(!poly_less(t1, t));
  CHECK(!poly_less(t, t));
}

TEST_CASE("evaluation works over extension fields") {
  FqCtx F(FieldConfig::make(2, 2));
  Fq u = F.gen();
  TPoly f = tpoly_from_ints(F, {1, 0, 1});  // t^2+1
  // u^2 = u+1, so f(u) = u
  CHECK(f.eval(u) == u);
}

TEST_CASE("polynomials from different fields refuse to mix") {
  FqCtx A(FieldConfig::make(2, 1));
  FqCtx B(FieldConfig::make(3, 1));
  CHECK_THROWS_AS(TPoly::X(A) + TPoly::X(B), Error);
}
