#include "ffheight/places.hpp"

#include <algorithm>

namespace ffheight {

Place Place::infinity(const FqCtx& F) {
  Place v;
  v.is_infinite = true;
  v.prime = TPoly::zero(F);
  return v;
}

Place Place::finite(const TPoly& prime) {
  if (prime.deg() < 1 || prime.lc() != prime.R->one())
    throw Error(ErrorKind::Domain, "a finite place needs a monic non-constant prime");
  if (!is_irreducible(prime))
    throw Error(ErrorKind::Domain, "finite place: " + format(prime) + " is reducible");
  Place v;
  v.is_infinite = false;
  v.prime = prime;
  return v;
}

bool place_less(const Place& a, const Place& b) {
  if (a.is_infinite != b.is_infinite) return b.is_infinite;
  if (a.is_infinite) return false;
  return poly_less(a.prime, b.prime);
}

std::string format(const Place& v) {
  return v.is_infinite ? "inf" : format(v.prime);
}

int valuation(const RationalFunction& x, const Place& v) {
  if (x.is_zero())
    throw Error(ErrorKind::Domain, "valuation of 0 is +infinity");
  if (v.is_infinite) return x.den().deg() - x.num().deg();
  return ord_at(x.num(), v.prime) - ord_at(x.den(), v.prime);
}

std::vector<std::pair<Place, int>> place_support(const RationalFunction& x) {
  if (x.is_zero())
    throw Error(ErrorKind::Domain, "support of 0 is not defined");
  std::vector<std::pair<Place, int>> out;
  // num and den are coprime, so each prime lies in exactly one of them.
  for (const auto& item : factor(x.num()).factors)
    out.emplace_back(Place::finite(item.prime), item.multiplicity);
  for (const auto& item : factor(x.den()).factors)
    out.emplace_back(Place::finite(item.prime), -item.multiplicity);
  int vinf = x.den().deg() - x.num().deg();
  if (vinf != 0) out.emplace_back(Place::infinity(x.field()), vinf);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return place_less(a.first, b.first); });
  return out;
}

Rat sum_formula_check(const RationalFunction& x) {
  Rat total(0);
  for (const auto& [place, val] : place_support(x))
    total += Rat(place.degree()) * Rat(val);
  return total;
}

}  // namespace ffheight
