#pragma once

#include <variant>
#include <vector>

#include "ffheight/places.hpp"

namespace ffheight {

struct LocalHeight {
  Place place;
  Rat h;  // d(v) * max(-v(x), 0), recorded only when nonzero
};

// Exact height data for one element; total == sum of locals.
struct HeightReport {
  Rat total{0};
  std::vector<LocalHeight> locals;
};

// Place-by-place Weil height of a rational element (factors the support).
HeightReport weil_height_rational(const RationalFunction& x);

// Independent closed form: h(n/d) = max(deg n, deg d) for coprime n, d.
Rat weil_height_closed_form(const RationalFunction& x);

// An element of an algebraic extension of F_q(t), given by its minimal
// polynomial sum a_i X^i with a_i in F_q[t]: content 1, a_d with monic
// leading coefficient (both enforced by normalization at construction).
struct AlgebraicElement {
  std::vector<TPoly> coeffs;  // a_0 .. a_d, d >= 1

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  // Normalizes content and the leading unit; rejects zero leading
  // coefficient and (for d <= 3) reducible minimal polynomials. Degree 4 is
  // accepted with a rational-root screen only; full irreducibility is the
  // caller's responsibility there.
  static AlgebraicElement from_minpoly(std::vector<TPoly> coeffs);
};

bool operator==(const AlgebraicElement& a, const AlgebraicElement& b);

// True when the element lies in the constant field closure: all minpoly
// coefficients are constants.
bool is_constant_element(const AlgebraicElement& a);

// h(alpha) = max_i deg(a_i) / d for the normalized minimal polynomial.
Rat weil_height_algebraic(const AlgebraicElement& a);

// Does sum a_i X^i have a root in F_q(t)? (Complete search via divisors of
// a_0 and a_d; degree-2/3 irreducibility reduces to this.)
bool minpoly_has_rational_root(const std::vector<TPoly>& coeffs);

// All monic divisors of f (from its factorization), in no particular order.
std::vector<TPoly> monic_divisors(const TPoly& f);

using Coordinate = std::variant<RationalFunction, AlgebraicElement>;

Rat coordinate_height(const Coordinate& c);

// Height of a point of G_a^n: the sum of the coordinate heights.
Rat height_point(const std::vector<Coordinate>& coords);

// h(x + y) <= h(x) + h(y), checked exactly; returns the three heights too.
struct TriangleReport {
  Rat hx, hy, hsum;
  bool holds;
};
TriangleReport triangle_check(const RationalFunction& x, const RationalFunction& y);

}  // namespace ffheight
