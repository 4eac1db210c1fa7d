#include "ffheight/heights.hpp"

#include <algorithm>

namespace ffheight {

HeightReport weil_height_rational(const RationalFunction& x) {
  HeightReport report;
  if (x.is_zero()) return report;
  for (const auto& [place, val] : place_support(x)) {
    if (val >= 0) continue;
    Rat h = Rat(place.degree()) * Rat(-val);
    report.locals.push_back(LocalHeight{place, h});
    report.total += h;
  }
  return report;
}

Rat weil_height_closed_form(const RationalFunction& x) {
  if (x.is_zero()) return Rat(0);
  return Rat(std::max(x.num().deg(), x.den().deg()));
}

AlgebraicElement AlgebraicElement::from_minpoly(std::vector<TPoly> coeffs) {
  if (coeffs.size() < 2)
    throw Error(ErrorKind::Domain, "minimal polynomial must have degree >= 1");
  const TPoly& top = coeffs.back();
  if (top.is_zero())
    throw Error(ErrorKind::Domain, "minimal polynomial with zero leading coefficient");
  const FqCtx& F = *top.R;

  // Content normalization, then scale so the leading coefficient is monic
  // (the unit ambiguity of the minimal polynomial).
  TPoly content = TPoly::zero(F);
  for (const TPoly& a : coeffs)
    if (!a.is_zero()) content = poly_gcd(content, a);
  if (content.deg() > 0)
    for (TPoly& a : coeffs)
      if (!a.is_zero()) a = a / content;
  Fq unit = F.inv(coeffs.back().lc());
  if (unit != F.one())
    for (TPoly& a : coeffs) a = a.scaled(unit);

  int d = static_cast<int>(coeffs.size()) - 1;
  if (d > 4)
    throw Error(ErrorKind::Unsupported, "algebraic elements of degree > 4");
  if (d <= 3 && d >= 2 && minpoly_has_rational_root(coeffs))
    throw Error(ErrorKind::Domain, "minimal polynomial is reducible (rational root)");
  if (d == 4 && minpoly_has_rational_root(coeffs))
    throw Error(ErrorKind::Domain, "minimal polynomial is reducible (rational root)");

  AlgebraicElement a;
  a.coeffs = std::move(coeffs);
  return a;
}

bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) {
  return a.coeffs == b.coeffs;
}

bool is_constant_element(const AlgebraicElement& a) {
  for (const TPoly& c : a.coeffs)
    if (c.deg() > 0) return false;
  return true;
}

Rat weil_height_algebraic(const AlgebraicElement& a) {
  int maxdeg = 0;
  for (const TPoly& c : a.coeffs) maxdeg = std::max(maxdeg, c.deg());
  return Rat(maxdeg, a.degree());
}

std::vector<TPoly> monic_divisors(const TPoly& f) {
  const FqCtx& F = *f.R;
  std::vector<TPoly> out{TPoly::one(F)};
  if (f.deg() < 1) return out;
  for (const auto& [prime, mult] : factor(f).factors) {
    std::size_t n = out.size();
    TPoly power = TPoly::one(F);
    for (int m = 1; m <= mult; ++m) {
      power = power * prime;
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

bool minpoly_has_rational_root(const std::vector<TPoly>& coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  const FqCtx& F = *coeffs.back().R;
  if (coeffs.front().is_zero()) return true;  // 0 is a root

  // A root r/s in lowest terms (s monic) forces r | a_0 up to a unit and
  // s | a_d. Check every candidate exactly via the homogeneous form.
  auto eval_hom = [&](const TPoly& r, const TPoly& s) {
    TPoly acc = TPoly::zero(F);
    for (int i = 0; i <= d; ++i)
      acc = acc + coeffs[i] * poly_pow(r, i) * poly_pow(s, d - i);
    return acc.is_zero();
  };
  std::vector<TPoly> rs = monic_divisors(coeffs.front());
  std::vector<TPoly> ss = monic_divisors(coeffs.back());
  for (const TPoly& r0 : rs) {
    for (const TPoly& s : ss) {
      if (poly_gcd(r0, s).deg() > 0) continue;
      for (long long unit = 1; unit < F.q(); ++unit) {
        TPoly r = r0.scaled(Fq{static_cast<std::uint16_t>(unit)});
        if (eval_hom(r, s)) return true;
      }
    }
  }
  return false;
}

Rat coordinate_height(const Coordinate& c) {
  if (std::holds_alternative<RationalFunction>(c))
    return weil_height_closed_form(std::get<RationalFunction>(c));
  return weil_height_algebraic(std::get<AlgebraicElement>(c));
}

Rat height_point(const std::vector<Coordinate>& coords) {
  if (coords.empty())
    throw Error(ErrorKind::Domain, "height of an empty point");
  Rat total(0);
  for (const Coordinate& c : coords) total += coordinate_height(c);
  return total;
}

TriangleReport triangle_check(const RationalFunction& x, const RationalFunction& y) {
  TriangleReport r{weil_height_closed_form(x), weil_height_closed_form(y), Rat(0), false};
  r.hsum = weil_height_closed_form(x + y);
  r.holds = r.hsum <= r.hx + r.hy;
  return r;
}

}  // namespace ffheight
