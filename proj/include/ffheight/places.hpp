#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffheight/rat.hpp"
#include "ffheight/rational.hpp"

namespace ffheight {

// A place of F_q(t): either the finite place of a monic irreducible of F_q[t]
// or the place at infinity (uniformizer 1/t, degree 1).
struct Place {
  bool is_infinite = false;
  TPoly prime;  // monic irreducible; for the infinite place, the zero poly

  static Place infinity(const FqCtx& F);
  static Place finite(const TPoly& prime);  // validates monic + irreducible

  const FqCtx& field() const { return *prime.R; }
  int degree() const { return is_infinite ? 1 : prime.deg(); }

  friend bool operator==(const Place& a, const Place& b) {
    return a.is_infinite == b.is_infinite &&
           (a.is_infinite || a.prime == b.prime);
  }
};

// Finite places by (degree, lex), then infinity last.
bool place_less(const Place& a, const Place& b);

std::string format(const Place& v);

// v(x) for x != 0 (v(0) would be +infinity).
int valuation(const RationalFunction& x, const Place& v);

// All places with v(x) != 0, with their valuations, sorted by place_less.
std::vector<std::pair<Place, int>> place_support(const RationalFunction& x);

// sum over places of d(v) * v(x); exactly 0 for x != 0 (product formula).
Rat sum_formula_check(const RationalFunction& x);

}  // namespace ffheight
