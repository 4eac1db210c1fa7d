#include "ffheight/tpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "ffheight/rat.hpp"

namespace ffheight {

namespace {

// Fixed seed: factorization must be bit-stable across runs for golden files.
constexpr std::uint64_t kEdfSeed = 0x00f1e1d5ULL;

// Squarefree decomposition in characteristic p. Returns pairs (g, m) with
// f = prod g^m, the g squarefree, pairwise coprime, monic.
void squarefree_decompose(const TPoly& f, int mult_scale,
                          std::vector<std::pair<TPoly, int>>& out) {
  const FqCtx& F = *f.R;
  TPoly d = f.derivative();
  if (d.is_zero()) {
    // Every exponent is divisible by p: recurse on the p-th root.
    squarefree_decompose(tpoly_pth_root(f), mult_scale * static_cast<int>(F.p()), out);
    return;
  }
  TPoly c = poly_gcd(f, d);
  TPoly w = (f / c).monic();
  int i = 1;
  while (w.deg() > 0) {
    TPoly y = poly_gcd(w, c);
    TPoly z = (w / y).monic();
    if (z.deg() > 0) out.emplace_back(z, i * mult_scale);
    ++i;
    w = y;
    c = (c / y).monic();
  }
  if (c.deg() > 0)
    squarefree_decompose(tpoly_pth_root(c), mult_scale * static_cast<int>(F.p()), out);
}

// Distinct-degree splitting of a squarefree monic f: pairs (product, d).
void distinct_degree(const TPoly& f, std::vector<std::pair<TPoly, int>>& out) {
  const FqCtx& F = *f.R;
  TPoly rem = f;
  TPoly h = TPoly::X(F) % rem;
  for (int d = 1; rem.deg() > 0 && 2 * d <= rem.deg(); ++d) {
    h = poly_powmod(h, F.q(), rem);
    TPoly g = poly_gcd(h - TPoly::X(F), rem);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      rem = (rem / g).monic();
      h = h % rem;
    }
  }
  if (rem.deg() > 0) out.emplace_back(rem, rem.deg());
}

TPoly random_poly(const FqCtx& F, int deg_bound, std::mt19937_64& rng) {
  std::vector<Fq> v;
  for (int i = 0; i < deg_bound; ++i)
    v.push_back(Fq{static_cast<std::uint16_t>(rng() % F.q())});
  return TPoly::from_coeffs(F, std::move(v));
}

// Equal-degree splitting (Cantor-Zassenhaus; additive trace variant for
// p = 2). f squarefree monic, all irreducible factors of degree d.
void equal_degree(const TPoly& f, int d, std::mt19937_64& rng,
                  std::vector<TPoly>& out) {
  const FqCtx& F = *f.R;
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  TPoly g = TPoly::one(F);
  while (g.deg() <= 0 || g.deg() == f.deg()) {
    TPoly a = random_poly(F, f.deg(), rng);
    if (a.deg() <= 0) continue;
    if (F.p() == 2) {
      // F_2-trace of a in F_{q^d}[t]/(f): sum of a^{2^i}, i < d * e.
      int bits = d * F.e();
      TPoly tr = a % f, sq = a % f;
      for (int i = 1; i < bits; ++i) {
        sq = (sq * sq) % f;
        tr = tr + sq;
      }
      g = poly_gcd(tr, f);
    } else {
      long long exp = (ipow(F.q(), d) - 1) / 2;
      TPoly b = poly_powmod(a, exp, f);
      g = poly_gcd(b - TPoly::one(F), f);
    }
  }
  equal_degree(g, d, rng, out);
  equal_degree((f / g).monic(), d, rng, out);
}

}  // namespace

Factorization factor(const TPoly& f) {
  if (f.is_zero())
    throw Error(ErrorKind::Domain, "factor: zero polynomial");
  const FqCtx& F = *f.R;
  Factorization result;
  result.unit = f.lc();
  if (f.deg() == 0) return result;

  std::vector<std::pair<TPoly, int>> squarefree;
  squarefree_decompose(f.monic(), 1, squarefree);

  std::mt19937_64 rng(kEdfSeed);
  std::map<long long, std::pair<TPoly, int>> collected;  // keyed for determinism below
  std::vector<std::pair<TPoly, int>> primes_mult;
  for (const auto& [part, mult] : squarefree) {
    std::vector<std::pair<TPoly, int>> by_degree;
    distinct_degree(part, by_degree);
    for (const auto& [prod, d] : by_degree) {
      std::vector<TPoly> primes;
      equal_degree(prod, d, rng, primes);
      for (const TPoly& prime : primes) primes_mult.emplace_back(prime, mult);
    }
  }
  std::sort(primes_mult.begin(), primes_mult.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  for (auto& [prime, mult] : primes_mult)
    result.factors.push_back(FactorItem{prime, mult});
  return result;
}

int ord_at(const TPoly& f, const TPoly& prime) {
  if (f.is_zero()) throw Error(ErrorKind::Domain, "ord_at: zero polynomial");
  if (prime.deg() < 1) throw Error(ErrorKind::Domain, "ord_at: constant prime");
  int n = 0;
  TPoly r = f;
  while (true) {
    auto [q, rem] = divmod(r, prime);
    if (!rem.is_zero()) return n;
    r = q;
    ++n;
  }
}

bool is_irreducible(const TPoly& f) {
  const FqCtx& F = *f.R;
  int n = f.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  if (n <= 4 && ipow(F.q(), n / 2) <= 1000000) {
    for (int d = 1; 2 * d <= n; ++d)
      for (const TPoly& g : monic_polys_of_degree(F, d))
        if ((f % g).is_zero()) return false;
    return true;
  }
  // Rabin: x^{q^n} == x (mod f), and x^{q^{n/l}} - x coprime to f for all
  // prime divisors l of n.
  TPoly x = TPoly::X(F);
  TPoly h = x % f;
  std::vector<TPoly> qpowers;  // h_i = x^{q^i} mod f
  qpowers.push_back(h);
  for (int i = 1; i <= n; ++i) {
    h = poly_powmod(h, F.q(), f);
    qpowers.push_back(h);
  }
  if (!(qpowers[n] - x).is_zero()) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0) continue;
    bool l_prime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) { l_prime = false; break; }
    if (!l_prime) continue;
    if (poly_gcd(qpowers[n / l] - x, f).deg() != 0) return false;
  }
  return true;
}

TPoly tpoly_pth_root(const TPoly& f) {
  const FqCtx& F = *f.R;
  int p = static_cast<int>(F.p());
  std::vector<Fq> v;
  for (int i = 0; i <= f.deg(); ++i) {
    Fq c = f.get(i);
    if (i % p != 0) {
      if (!F.is_zero(c))
        throw Error(ErrorKind::Domain, "pth_root: exponent not divisible by p");
      continue;
    }
    v.push_back(F.pth_root(c));
  }
  return TPoly::from_coeffs(F, std::move(v));
}

TPoly coeff_frobenius(const TPoly& f, int s) {
  const FqCtx& F = *f.R;
  std::vector<Fq> v;
  v.reserve(f.c.size());
  for (Fq c : f.c) v.push_back(F.frob_pow(c, s));
  return TPoly::from_coeffs(F, std::move(v));
}

TPoly tpoly_pth_power(const TPoly& f, int s) {
  const FqCtx& F = *f.R;
  if (f.is_zero() || s == 0) return s == 0 ? f : f;
  long long step = ipow(F.p(), s);
  std::vector<Fq> v(static_cast<std::size_t>(f.deg()) * step + 1, F.zero());
  for (int i = 0; i <= f.deg(); ++i)
    v[static_cast<std::size_t>(i) * step] = F.frob_pow(f.get(i), s);
  return TPoly::from_coeffs(F, std::move(v));
}

std::vector<TPoly> monic_polys_of_degree(const FqCtx& F, int d) {
  if (d == 0) return {TPoly::one(F)};
  long long count = ipow(F.q(), d);
  std::vector<TPoly> out;
  out.reserve(count);
  TPoly xd = TPoly::X(F).shifted(d - 1);
  for (long long idx = 0; idx < count; ++idx)
    out.push_back(tpoly_from_index(F, idx, d) + xd);
  return out;
}

TPoly tpoly_from_index(const FqCtx& F, long long idx, int len) {
  std::vector<Fq> v;
  v.reserve(len);
  for (int i = 0; i < len; ++i) {
    v.push_back(Fq{static_cast<std::uint16_t>(idx % F.q())});
    idx /= F.q();
  }
  return TPoly::from_coeffs(F, std::move(v));
}

long long tpoly_to_index(const TPoly& f, int len) {
  long long idx = 0;
  for (int i = len - 1; i >= 0; --i) idx = idx * f.R->q() + f.get(i).v;
  return idx;
}

TPoly tpoly_from_ints(const FqCtx& F, const std::vector<long long>& coeffs) {
  std::vector<Fq> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.push_back(F.from_int(c));
  return TPoly::from_coeffs(F, std::move(v));
}

std::string format_var(const TPoly& f, const std::string& var) {
  const FqCtx& F = *f.R;
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.deg(); i >= 0; --i) {
    Fq c = f.get(i);
    if (F.is_zero(c)) continue;
    if (!first) out << "+";
    first = false;
    std::string cs = F.format(c);
    bool needs_parens = cs.find('+') != std::string::npos;
    if (i == 0) {
      out << cs;
    } else {
      if (c != F.one()) {
        if (needs_parens) out << "(" << cs << ")";
        else out << cs;
        out << "*";
      }
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string format(const TPoly& f) { return format_var(f, "t"); }

}  // namespace ffheight
