#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ffheight/fq.hpp"

using namespace ffheight;

static Fq el(int i) { return Fq{static_cast<std::uint16_t>(i)}; }

TEST_CASE("field config rejects bad parameters") {
  CHECK_THROWS_AS(FieldConfig::make(4, 1), Error);    // not prime
  CHECK_THROWS_AS(FieldConfig::make(1, 1), Error);
  CHECK_THROWS_AS(FieldConfig::make(0, 2), Error);
  CHECK_THROWS_AS(FieldConfig::make(2, 5), Error);    // e > 4
  CHECK_THROWS_AS(FieldConfig::make(2, 0), Error);
  CHECK_THROWS_AS(FieldConfig::make(11, 3), Error);   // q = 1331 > 1024

  try {
    FieldConfig::make(9, 1);
    FAIL("expected throw");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("largest supported fields construct") {
  CHECK(FqCtx(FieldConfig::make(31, 2)).q() == 961);
  CHECK(FqCtx(FieldConfig::make(2, 4)).q() == 16);
  CHECK(FqCtx(FieldConfig::make(997, 1)).q() == 997);
}

TEST_CASE("default modulus is the lex-smallest monic irreducible") {
  CHECK(FieldConfig::make(2, 2).modulus == std::vector<int>{1, 1, 1});  // u^2+u+1
  CHECK(FieldConfig::make(3, 2).modulus == std::vector<int>{1, 0, 1});  // u^2+1
  CHECK(FieldConfig::make(2, 3).modulus == std::vector<int>{1, 0, 1, 1});
  CHECK(FieldConfig::make(2, 4).modulus == std::vector<int>{1, 0, 0, 1, 1});
}

TEST_CASE("explicit modulus is validated") {
  CHECK_THROWS_AS(FieldConfig::make(2, 2, {1, 0, 1}), Error);  // (u+1)^2
  CHECK_NOTHROW(FieldConfig::make(2, 2, {1, 1, 1}));
  CHECK_THROWS_AS(FieldConfig::make(2, 2, {1, 1}), Error);     // wrong degree
  CHECK_THROWS_AS(FieldConfig::make(2, 2, {1, 1, 2}), Error);  // not monic mod 2
}

TEST_CASE("from_int reduces modulo p") {
  FqCtx F(FieldConfig::make(3, 1));
  CHECK(F.from_int(5) == F.from_int(2));
  CHECK(F.from_int(-1) == F.from_int(2));
  CHECK(F.is_zero(F.from_int(3)));
  CHECK(F.is_zero(F.from_int(-6)));
  CHECK(F.from_int(1) == F.one());
}

static void check_field_axioms(const FqCtx& F) {
  const int q = static_cast<int>(F.q());
  for (int i = 0; i < q; ++i) {
    Fq a = el(i);
    CHECK(F.add(a, F.zero()) == a);
    CHECK(F.mul(a, F.one()) == a);
    CHECK(F.is_zero(F.add(a, F.neg(a))));
    CHECK(F.pow(a, q) == a);  // x^q = x
    if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
    for (int j = 0; j < q; ++j) {
      Fq b = el(j);
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.pow(F.add(a, b), F.p()) ==
            F.add(F.pow(a, F.p()), F.pow(b, F.p())));
      for (int k = 0; k < q; ++k) {
        Fq c = el(k);
        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
  check_field_axioms(FqCtx(FieldConfig::make(2, 1)));
  check_field_axioms(FqCtx(FieldConfig::make(3, 1)));
  check_field_axioms(FqCtx(FieldConfig::make(2, 2)));
  check_field_axioms(FqCtx(FieldConfig::make(5, 1)));
  check_field_axioms(FqCtx(FieldConfig::make(2, 3)));
  check_field_axioms(FqCtx(FieldConfig::make(3, 2)));
}

TEST_CASE("multiplicative order divides q-1") {
  FqCtx F(FieldConfig::make(2, 4));
  for (int i = 1; i < F.q(); ++i) {
    CHECK(F.pow(el(i), F.q() - 1) == F.one());
  }
}

TEST_CASE("inverse of zero is a domain error") {
  FqCtx F(FieldConfig::make(3, 1));
  try {
    F.inv(F.zero());
    FAIL("expected throw");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("frobenius and p-th root are inverse bijections") {
  FqCtx F(FieldConfig::make(2, 3));
  std::set<int> images;
  for (int i = 0; i < F.q(); ++i) {
    Fq a = el(i);
    Fq fa = F.frob(a);
    CHECK(fa == F.pow(a, F.p()));
    CHECK(F.pth_root(fa) == a);
    images.insert(fa.v);
  }
  CHECK(images.size() == static_cast<size_t>(F.q()));
}

TEST_CASE("frob_pow iterates the frobenius") {
  FqCtx F(FieldConfig::make(3, 2));
  for (int i = 0; i < F.q(); ++i) {
    Fq a = el(i);
    CHECK(F.frob_pow(a, 2) == F.frob(F.frob(a)));
    CHECK(F.frob_pow(a, 0) == a);
    CHECK(F.frob_pow(a, F.e()) == a);  // full orbit closes
  }
}

TEST_CASE("subfield membership matches frobenius fixed points") {
  FqCtx F(FieldConfig::make(2, 4));
  // F_4 inside F_16: fixed points of x -> x^(2^2)
  int count = 0;
  for (int i = 0; i < F.q(); ++i) {
    Fq a = el(i);
    bool fixed = F.frob_pow(a, 2) == a;
    CHECK(F.in_subfield(a, 2) == fixed);
    if (fixed) ++count;
  }
  CHECK(count == 4);
  CHECK(F.subfield_elements(2).size() == 4);
  CHECK(F.subfield_elements(1).size() == 2);
  CHECK(F.subfield_elements(4).size() == 16);
}

TEST_CASE("generator exists only for proper extensions") {
  FqCtx F4(FieldConfig::make(2, 2));
  Fq u = F4.gen();
  CHECK(!F4.is_zero(u));
  CHECK(F4.is_zero(F4.add(F4.add(F4.mul(u, u), u), F4.one())));  // u^2+u+1 = 0

  FqCtx F2(FieldConfig::make(2, 1));
  CHECK_THROWS_AS(F2.gen(), Error);
}

TEST_CASE("coefficient vectors round-trip") {
  FqCtx F(FieldConfig::make(3, 3));
  Fq x = F.from_coeffs({0, 1, 2});
  CHECK(F.coeffs(x) == std::vector<int>{0, 1, 2});
  CHECK(F.from_coeffs({5, -2, 0}) == F.from_coeffs({2, 1, 0}));
}

TEST_CASE("element formatting") {
  FqCtx F2(FieldConfig::make(2, 1));
  CHECK(F2.format(F2.zero()) == "0");
  CHECK(F2.format(F2.one()) == "1");

  FqCtx F4(FieldConfig::make(2, 2));
  CHECK(F4.format(F4.gen()) == "u");
  CHECK(F4.format(F4.add(F4.gen(), F4.one())) == "u+1");

  FqCtx F27(FieldConfig::make(3, 3));
  CHECK(F27.format(F27.from_coeffs({0, 1, 2})) == "2*u^2+u");

  FqCtx F7(FieldConfig::make(7, 1));
  CHECK(F7.format(F7.from_int(5)) == "5");
}

TEST_CASE("random arithmetic matches integer model in prime fields") {
  FqCtx F(FieldConfig::make(7, 1));
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    long long a = rng() % 7, b = rng() % 7;
    CHECK(F.add(F.from_int(a), F.from_int(b)) == F.from_int((a + b) % 7));
    CHECK(F.mul(F.from_int(a), F.from_int(b)) == F.from_int((a * b) % 7));
    CHECK(F.sub(F.from_int(a), F.from_int(b)) ==
          F.from_int(((a - b) % 7 + 7) % 7));
  }
}
