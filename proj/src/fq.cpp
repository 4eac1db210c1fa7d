#include "ffheight/fq.hpp"

#include <algorithm>
#include <sstream>

namespace ffheight {

namespace {

constexpr long long kMaxQ = 1024;

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Digit-vector arithmetic over F_p, used only while building tables and
// validating moduli. Vectors are coefficient lists low-to-high, not trimmed.
using Digits = std::vector<long long>;

int dig_deg(const Digits& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Digits dig_mulmod(const Digits& a, const Digits& b, const Digits& m, long long p) {
  Digits prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  int dm = dig_deg(m);
  for (int i = static_cast<int>(prod.size()) - 1; i >= dm; --i) {
    if (prod[i] == 0) continue;
    long long c = prod[i];  // m is monic, so the quotient digit is just c
    for (int j = 0; j <= dm; ++j)
      prod[i - dm + j] = ((prod[i - dm + j] - c * m[j]) % p + p) % p;
  }
  prod.resize(dm);
  return prod;
}

// Remainder of a by b over F_p (b need not be monic).
Digits dig_rem(Digits a, const Digits& b, long long p) {
  int db = dig_deg(b);
  long long lead_inv = 0;
  for (long long x = 1; x < p; ++x)
    if (x * b[db] % p == 1) { lead_inv = x; break; }
  for (int i = dig_deg(a); i >= db; i = dig_deg(a)) {
    long long c = a[i] * lead_inv % p;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  return a;
}

bool dig_irreducible(const Digits& m, long long p) {
  int dm = dig_deg(m);
  if (dm < 1) return false;
  if (dm == 1) return true;
  // Trial division by every monic polynomial of degree 1..dm/2.
  for (int d = 1; 2 * d <= dm; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Digits div(d + 1, 0);
      long long t = idx;
      for (int i = 0; i < d; ++i) { div[i] = t % p; t /= p; }
      div[d] = 1;
      if (dig_deg(dig_rem(m, div, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FieldConfig FieldConfig::make(long long p, int e, std::vector<int> modulus) {
  if (!is_prime(p))
    throw Error(ErrorKind::Domain, "p = " + std::to_string(p) + " is not prime");
  if (e < 1 || e > 4)
    throw Error(ErrorKind::Unsupported, "extension degree e must be in 1..4");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ)
      throw Error(ErrorKind::Unsupported, "q = p^e exceeds the table cap " +
                                              std::to_string(kMaxQ));
  }

  FieldConfig cfg;
  cfg.p = p;
  cfg.e = e;
  if (!modulus.empty()) {
    if (static_cast<int>(modulus.size()) != e + 1)
      throw Error(ErrorKind::Domain, "modulus must have degree e");
    Digits m(modulus.begin(), modulus.end());
    for (auto& c : m) c = ((c % p) + p) % p;
    if (m[e] != 1)
      throw Error(ErrorKind::Domain, "modulus must be monic");
    if (e > 1 && !dig_irreducible(m, p))
      throw Error(ErrorKind::Domain, "modulus is reducible over F_p");
    cfg.modulus.assign(m.begin(), m.end());
  } else if (e == 1) {
    cfg.modulus = {0, 1};  // F_p itself; u is never exposed
  } else {
    // Lexicographically smallest monic irreducible of degree e: enumerate
    // constant coefficient first (most significant in the comparison).
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Digits m(e + 1, 0);
      long long rest = idx;
      for (int i = 0; i < e; ++i) {
        long long unit = 1;
        for (int j = 0; j < e - 1 - i; ++j) unit *= p;
        m[i] = rest / unit;
        rest %= unit;
      }
      m[e] = 1;
      if (dig_irreducible(m, p)) {
        cfg.modulus.assign(m.begin(), m.end());
        break;
      }
    }
  }
  return cfg;
}

FqCtx::FqCtx(const FieldConfig& cfg) : cfg_(FieldConfig::make(cfg.p, cfg.e, cfg.modulus)) {
  q_ = 1;
  for (int i = 0; i < cfg_.e; ++i) q_ *= cfg_.p;

  const long long p = cfg_.p;
  const std::size_t q = static_cast<std::size_t>(q_);
  Digits m(cfg_.modulus.begin(), cfg_.modulus.end());

  auto to_digits = [&](long long v) {
    Digits d(cfg_.e, 0);
    for (int i = 0; i < cfg_.e; ++i) { d[i] = v % p; v /= p; }
    return d;
  };
  auto from_digits = [&](const Digits& d) {
    long long v = 0;
    for (int i = cfg_.e - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(d.size()) ? d[i] : 0);
    return static_cast<std::uint16_t>(v);
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);

  for (std::size_t a = 0; a < q; ++a) {
    Digits da = to_digits(static_cast<long long>(a));
    Digits na(cfg_.e);
    for (int i = 0; i < cfg_.e; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = from_digits(na);
    for (std::size_t b = 0; b < q; ++b) {
      Digits db = to_digits(static_cast<long long>(b));
      Digits s(cfg_.e);
      for (int i = 0; i < cfg_.e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = from_digits(s);
      mul_[a * q + b] = from_digits(dig_mulmod(da, db, m, p));
    }
  }
  // Inverses by scanning the multiplication row; Frobenius by repeated squaring
  // through the tables (p-fold product).
  for (std::size_t a = 1; a < q; ++a) {
    for (std::size_t b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) { inv_[a] = static_cast<std::uint16_t>(b); break; }
  }
  for (std::size_t a = 0; a < q; ++a) {
    std::uint16_t r = 1;
    long long n = p;
    std::uint16_t base = static_cast<std::uint16_t>(a);
    while (n > 0) {
      if (n & 1) r = mul_[static_cast<std::size_t>(r) * q + base];
      base = mul_[static_cast<std::size_t>(base) * q + base];
      n >>= 1;
    }
    frob_[a] = r;
  }
}

Fq FqCtx::gen() const {
  if (cfg_.e < 2)
    throw Error(ErrorKind::Domain, "u is undefined for a prime field (e = 1)");
  return Fq{static_cast<std::uint16_t>(cfg_.p)};
}

Fq FqCtx::inv(Fq a) const {
  if (a.v == 0) throw Error(ErrorKind::Domain, "division by zero in F_q");
  return Fq{inv_[a.v]};
}

Fq FqCtx::pow(Fq a, long long n) const {
  if (n < 0) return pow(inv(a), -n);
  Fq r = one(), base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

Fq FqCtx::frob_pow(Fq a, int s) const {
  Fq r = a;
  for (int i = 0; i < s; ++i) r = frob(r);
  return r;
}

std::vector<Fq> FqCtx::subfield_elements(int s) const {
  if (s < 1 || cfg_.e % s != 0)
    throw Error(ErrorKind::Domain, "F_{p^s} is a subfield only when s | e");
  std::vector<Fq> out;
  for (long long v = 0; v < q_; ++v) {
    Fq a{static_cast<std::uint16_t>(v)};
    if (in_subfield(a, s)) out.push_back(a);
  }
  return out;
}

Fq FqCtx::from_int(long long n) const {
  long long r = ((n % cfg_.p) + cfg_.p) % cfg_.p;
  return Fq{static_cast<std::uint16_t>(r)};
}

Fq FqCtx::from_coeffs(const std::vector<long long>& c) const {
  Fq u = (cfg_.e >= 2) ? gen() : one();
  Fq r = zero(), upow = one();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (static_cast<int>(i) >= cfg_.e && (c[i] % cfg_.p) != 0)
      throw Error(ErrorKind::Domain, "coefficient vector longer than e");
    r = add(r, mul(from_int(c[i]), upow));
    upow = mul(upow, u);
  }
  return r;
}

std::vector<int> FqCtx::coeffs(Fq a) const {
  std::vector<int> d(cfg_.e);
  long long v = a.v;
  for (int i = 0; i < cfg_.e; ++i) { d[i] = static_cast<int>(v % cfg_.p); v /= cfg_.p; }
  return d;
}

std::string FqCtx::format(Fq a) const {
  if (a.v == 0) return "0";
  std::vector<int> d = coeffs(a);
  std::ostringstream out;
  bool first = true;
  for (int i = cfg_.e - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0) {
      out << d[i];
    } else {
      if (d[i] != 1) out << d[i] << "*";
      out << "u";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace ffheight
