#pragma once

#include "ffheight/heights.hpp"

namespace ffheight {

// Splitting data for one base place v of F_q(t) in the radical extension
// K(alpha), alpha^d = g. Every place w above v has the same ramification
// index e = d / gcd(v(g), d); the residue degrees come from the factor
// degrees of Y^m - (residue of g pi^{-v(g)}) over k(v), m = gcd(v(g), d).
struct ExtensionPlaceData {
  Place base;
  int ram_index;    // e(w|v), shared by all w | v
  int res_degree;   // f(w|v) for this particular w
  int w_alpha;      // w(alpha) = v(g)/m in the Z-normalized valuation of w
  Rat deg_w;        // d(w) = f(w|v) * d(v) / d, normalized to the base field
};

struct KummerResult {
  Rat height;                             // h(alpha) assembled place by place
  std::vector<ExtensionPlaceData> places; // all places above supp(g), base order
};

// Place decomposition and height of alpha = g^{1/d} over F_q(t), for a
// non-constant polynomial radicand g. Preconditions: p does not divide d,
// and g has a prime factor whose multiplicity is coprime to d (which makes
// X^d - g irreducible). Sum e*f = d is checked at every base place.
KummerResult kummer_place_oracle(const TPoly& g, int d);

}  // namespace ffheight
