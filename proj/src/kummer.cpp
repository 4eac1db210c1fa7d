#include "ffheight/kummer.hpp"

#include <algorithm>
#include <numeric>

#include "ffheight/extension.hpp"

namespace ffheight {

namespace {

// Factor degrees (with multiplicity of appearance) of Y^m - c over a finite
// field given as a context: distinct-degree census via gcd with Y^{Q^j} - Y.
// Y^m - c is squarefree whenever p does not divide m and c != 0.
template <class Ctx>
std::vector<int> binomial_factor_degrees(const Ctx& k, long long Q,
                                         const typename Ctx::Elem& c, int m) {
  using P = Poly<Ctx>;
  P rem = P::X(k).shifted(m - 1) - P::constant(k, c);  // Y^m - c
  if (m == 1) return {1};
  std::vector<int> degrees;
  P y = P::X(k);
  P h = y % rem;
  for (int d = 1; rem.deg() > 0 && 2 * d <= rem.deg(); ++d) {
    // h = Y^{Q^d} mod rem, built by exponentiation in steps of Q.
    h = poly_powmod(h, Q, rem);
    P g = poly_gcd(h - y, rem);
    if (g.deg() > 0) {
      for (int i = 0; i < g.deg() / d; ++i) degrees.push_back(d);
      rem = (rem / g).monic();
      h = h % rem;
    }
  }
  if (rem.deg() > 0) degrees.push_back(rem.deg());
  return degrees;
}

int gcd_mod(long long nu, int d) {
  long long r = ((nu % d) + d) % d;
  return r == 0 ? d : static_cast<int>(std::gcd(r, static_cast<long long>(d)));
}

}  // namespace

KummerResult kummer_place_oracle(const TPoly& g, int d) {
  const FqCtx& F = *g.R;
  if (g.deg() < 1)
    throw Error(ErrorKind::Domain, "radicand must be a non-constant polynomial");
  if (d < 2 || d > 4)
    throw Error(ErrorKind::Unsupported, "radical degree d must be 2..4");
  if (d % F.p() == 0)
    throw Error(ErrorKind::Unsupported,
                "radical degree divisible by the characteristic");

  Factorization fac = factor(g);
  bool witness = false;
  for (const auto& item : fac.factors)
    if (std::gcd(item.multiplicity, d) == 1) witness = true;
  if (!witness)
    throw Error(ErrorKind::Domain,
                "no prime factor of the radicand has multiplicity coprime to "
                "the radical degree; X^d - g is reducible");

  KummerResult result;
  result.height = Rat(0);

  // Finite places in the support of g. v(g) = multiplicity > 0 here, so only
  // infinity can contribute to the height.
  for (const auto& item : fac.factors) {
    Place v = Place::finite(item.prime);
    long long nu = item.multiplicity;
    int m = gcd_mod(nu, d);
    int e = d / m;
    QuotCtx k(item.prime);
    // Residue of g * P^{-nu} at v: strip the P-part, reduce mod P.
    TPoly stripped = g;
    for (long long i = 0; i < nu; ++i) stripped = stripped / item.prime;
    TPoly cbar = k.reduce(stripped);
    std::vector<int> degs = binomial_factor_degrees(k, k.order(), cbar, m);
    int ef_sum = 0;
    for (int f : degs) {
      ExtensionPlaceData data;
      data.base = v;
      data.ram_index = e;
      data.res_degree = f;
      data.w_alpha = static_cast<int>(nu) / m;
      data.deg_w = Rat(f * v.degree(), d);
      if (data.w_alpha < 0) result.height += data.deg_w * Rat(-data.w_alpha);
      result.places.push_back(data);
      ef_sum += e * f;
    }
    if (ef_sum != d)
      throw Error(ErrorKind::Domain, "place decomposition failed: sum e*f != d");
  }

  // The infinite place: v(g) = -deg g, residue field F_q, residue = lc(g).
  {
    long long nu = -g.deg();
    int m = gcd_mod(nu, d);
    int e = d / m;
    std::vector<int> degs = binomial_factor_degrees(F, F.q(), g.lc(), m);
    int ef_sum = 0;
    for (int f : degs) {
      ExtensionPlaceData data;
      data.base = Place::infinity(F);
      data.ram_index = e;
      data.res_degree = f;
      data.w_alpha = static_cast<int>(nu) / m;
      data.deg_w = Rat(f, d);
      if (data.w_alpha < 0) result.height += data.deg_w * Rat(-data.w_alpha);
      result.places.push_back(data);
      ef_sum += e * f;
    }
    if (ef_sum != d)
      throw Error(ErrorKind::Domain, "place decomposition failed at infinity");
  }

  return result;
}

}  // namespace ffheight
