#include "ffheight/extension.hpp"

#include <algorithm>

namespace ffheight {

QuotCtx::QuotCtx(const TPoly& P) : P_(P) {
  if (P.deg() < 1 || P.lc() != P.R->one() || !is_irreducible(P))
    throw Error(ErrorKind::Domain, "quotient modulus must be monic irreducible");
}

long long QuotCtx::order() const { return ipow(base().q(), P_.deg()); }

QuotCtx::Elem QuotCtx::inv(const Elem& a) const {
  if (a.is_zero()) throw Error(ErrorKind::Domain, "division by zero in residue field");
  auto [g, s, t] = poly_xgcd(a, P_);
  (void)t;
  if (g.deg() != 0)
    throw Error(ErrorKind::Domain, "non-invertible element in residue field");
  return reduce(s);
}

SimpleExtCtx::SimpleExtCtx(const FqCtx& F, const Poly<RatFunCtx>& modulus)
    : K_(F), M_(modulus) {
  if (M_.deg() < 1)
    throw Error(ErrorKind::Domain, "extension modulus must be non-constant");
  M_ = M_.monic();
  Poly<RatFunCtx> d = M_.derivative();
  if (d.is_zero())
    throw Error(ErrorKind::Domain,
                "extension modulus is inseparable (derivative 0); "
                "squarefreeness cannot be certified");
  if (poly_gcd(M_, d).deg() != 0)
    throw Error(ErrorKind::Domain, "extension modulus is not squarefree");
}

SimpleExtCtx::Elem SimpleExtCtx::pow(const Elem& a, long long n) const {
  if (n < 0) throw Error(ErrorKind::Domain, "negative power in extension ring");
  Elem r = one(), base = reduce(a);
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

SimpleExtCtx::Elem SimpleExtCtx::frobenius_pow(const Elem& a, int s) const {
  Elem r = reduce(a);
  long long p = K_.base().p();
  for (int i = 0; i < s; ++i) r = pow(r, p);
  return r;
}

namespace {

// Determinant over a commutative coefficient ring by cofactor expansion.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m, const T& zero) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T det = zero;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<T> row;
      for (std::size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    T term = m[i][0] * cofactor_det(minor, zero);
    det = (i % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

Poly<RatFunCtx> SimpleExtCtx::charpoly(const Elem& a) const {
  int D = degree();
  // Columns: coordinates of a * theta^j.
  std::vector<Elem> cols;
  Elem power = one();
  for (int j = 0; j < D; ++j) {
    cols.push_back(mul(a, power));
    power = mul(power, theta());
  }
  // Entries of Y*I - A as polynomials in Y over F_q(t).
  using YPoly = Poly<RatFunCtx>;
  std::vector<std::vector<YPoly>> m(D, std::vector<YPoly>(D, YPoly::zero(K_)));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      YPoly entry = YPoly::constant(K_, K_.neg(cols[j].get(i)));
      if (i == j) entry = entry + YPoly::X(K_);
      m[i][j] = entry;
    }
  return cofactor_det(m, YPoly::zero(K_));
}

Rat SimpleExtCtx::elem_height(const Elem& a) const {
  Poly<RatFunCtx> chi = charpoly(a);
  const FqCtx& F = K_.base();
  // Clear denominators: multiply by the lcm of the coefficient denominators.
  TPoly L = TPoly::one(F);
  for (int i = 0; i <= chi.deg(); ++i) {
    TPoly den = chi.get(i).den();  // get() returns by value; copy out
    L = (L * den) / poly_gcd(L, den);
  }
  std::vector<TPoly> cleared;
  for (int i = 0; i <= chi.deg(); ++i) {
    RationalFunction c = chi.get(i);
    cleared.push_back(c.num() * (L / c.den()));
  }
  TPoly content = TPoly::zero(F);
  for (const TPoly& c : cleared)
    if (!c.is_zero()) content = poly_gcd(content, c);
  int maxdeg = 0;
  for (const TPoly& c : cleared)
    if (!c.is_zero()) maxdeg = std::max(maxdeg, (c / content).deg());
  return Rat(maxdeg, degree());
}

}  // namespace ffheight
