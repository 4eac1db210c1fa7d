#pragma once

#include <utility>
#include <vector>

#include "ffheight/errors.hpp"

namespace ffheight {

// Ring-identity key for context equality checks. Distinct context objects
// denote the same ring when their keys agree (contexts that are pure wrappers
// around another context override this; see RatFunCtx).
template <class Ctx>
const void* ctx_key(const Ctx& c) {
  return &c;
}

// Dense univariate polynomials over an arithmetic context. A context exposes
//   using Elem = ...;
//   Elem zero()/one(); bool is_zero(e); bool eq(a, b);
//   Elem add/sub/mul(a, b); Elem neg(a); Elem inv(a);   (inv: field contexts)
// Coefficients are stored low-to-high with no trailing zeros; the zero
// polynomial has an empty vector and degree -1. Every value carries a pointer
// to its (immutable) context; mixing contexts is a bug and throws.
template <class Ctx>
struct Poly {
  using Elem = typename Ctx::Elem;

  const Ctx* R = nullptr;
  std::vector<Elem> c;

  static Poly zero(const Ctx& R) { return Poly{&R, {}}; }
  static Poly constant(const Ctx& R, const Elem& e) {
    Poly f{&R, {e}};
    f.trim();
    return f;
  }
  static Poly one(const Ctx& R) { return constant(R, R.one()); }
  static Poly X(const Ctx& R) { return Poly{&R, {R.zero(), R.one()}}; }
  static Poly from_coeffs(const Ctx& R, std::vector<Elem> v) {
    Poly f{&R, std::move(v)};
    f.trim();
    return f;
  }

  void trim() {
    while (!c.empty() && R->is_zero(c.back())) c.pop_back();
  }

  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elem get(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : R->zero();
  }
  const Elem& lc() const {
    if (c.empty()) throw Error(ErrorKind::Domain, "leading coefficient of 0");
    return c.back();
  }

  friend void check_same_ctx(const Poly& a, const Poly& b) {
    if (a.R != b.R && ctx_key(*a.R) != ctx_key(*b.R))
      throw Error(ErrorKind::Domain, "polynomials from different contexts");
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same_ctx(a, b);
    std::vector<Elem> v;
    v.reserve(std::max(a.c.size(), b.c.size()));
    for (int i = 0; i < static_cast<int>(std::max(a.c.size(), b.c.size())); ++i)
      v.push_back(a.R->add(a.get(i), b.get(i)));
    return from_coeffs(*a.R, std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    check_same_ctx(a, b);
    std::vector<Elem> v;
    v.reserve(std::max(a.c.size(), b.c.size()));
    for (int i = 0; i < static_cast<int>(std::max(a.c.size(), b.c.size())); ++i)
      v.push_back(a.R->sub(a.get(i), b.get(i)));
    return from_coeffs(*a.R, std::move(v));
  }

  friend Poly operator-(const Poly& a) {
    std::vector<Elem> v;
    v.reserve(a.c.size());
    for (const Elem& e : a.c) v.push_back(a.R->neg(e));
    return Poly{a.R, std::move(v)};
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same_ctx(a, b);
    if (a.is_zero() || b.is_zero()) return zero(*a.R);
    std::vector<Elem> v(a.c.size() + b.c.size() - 1, a.R->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.R->is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        v[i + j] = a.R->add(v[i + j], a.R->mul(a.c[i], b.c[j]));
    }
    return from_coeffs(*a.R, std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.R != b.R || a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (!a.R->eq(a.c[i], b.c[i])) return false;
    return true;
  }

  Poly scaled(const Elem& s) const {
    std::vector<Elem> v;
    v.reserve(c.size());
    for (const Elem& e : c) v.push_back(R->mul(e, s));
    return from_coeffs(*R, std::move(v));
  }

  Poly shifted(int k) const {  // multiply by X^k
    if (is_zero()) return *this;
    std::vector<Elem> v(c.size() + k, R->zero());
    for (std::size_t i = 0; i < c.size(); ++i) v[i + k] = c[i];
    return Poly{R, std::move(v)};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(R->inv(lc()));
  }

  Elem eval(const Elem& x) const {
    Elem r = R->zero();
    for (int i = deg(); i >= 0; --i) r = R->add(R->mul(r, x), c[i]);
    return r;
  }

  Poly derivative() const {
    std::vector<Elem> v;
    for (int i = 1; i <= deg(); ++i) {
      Elem term = R->zero();
      for (int k = 0; k < i; ++k) term = R->add(term, c[i]);  // i * c_i in char p
      v.push_back(term);
    }
    return from_coeffs(*R, std::move(v));
  }
};

// Euclidean division; requires an invertible leading coefficient of b.
template <class Ctx>
std::pair<Poly<Ctx>, Poly<Ctx>> divmod(const Poly<Ctx>& a, const Poly<Ctx>& b) {
  check_same_ctx(a, b);
  if (b.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
  const Ctx& R = *a.R;
  auto lead_inv = R.inv(b.lc());
  Poly<Ctx> q = Poly<Ctx>::zero(R), r = a;
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int k = r.deg() - b.deg();
    auto coef = R.mul(r.lc(), lead_inv);
    Poly<Ctx> term = Poly<Ctx>::constant(R, coef).shifted(k);
    q = q + term;
    r = r - term * b;
  }
  return {q, r};
}

template <class Ctx>
Poly<Ctx> operator%(const Poly<Ctx>& a, const Poly<Ctx>& b) {
  return divmod(a, b).second;
}

template <class Ctx>
Poly<Ctx> operator/(const Poly<Ctx>& a, const Poly<Ctx>& b) {
  return divmod(a, b).first;
}

// Monic gcd by the Euclidean algorithm (field contexts).
template <class Ctx>
Poly<Ctx> poly_gcd(Poly<Ctx> a, Poly<Ctx> b) {
  check_same_ctx(a, b);
  while (!b.is_zero()) {
    auto r = a % b;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
template <class Ctx>
std::tuple<Poly<Ctx>, Poly<Ctx>, Poly<Ctx>> poly_xgcd(Poly<Ctx> a, Poly<Ctx> b) {
  check_same_ctx(a, b);
  const Ctx& R = *a.R;
  Poly<Ctx> s0 = Poly<Ctx>::one(R), s1 = Poly<Ctx>::zero(R);
  Poly<Ctx> t0 = Poly<Ctx>::zero(R), t1 = Poly<Ctx>::one(R);
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
    auto s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    auto t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a.is_zero()) return {a, s0, t0};
  auto u = R.inv(a.lc());
  return {a.scaled(u), s0.scaled(u), t0.scaled(u)};
}

template <class Ctx>
Poly<Ctx> poly_pow(Poly<Ctx> base, long long n) {
  Poly<Ctx> r = Poly<Ctx>::one(*base.R);
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

template <class Ctx>
Poly<Ctx> poly_powmod(Poly<Ctx> base, long long n, const Poly<Ctx>& m) {
  Poly<Ctx> r = Poly<Ctx>::one(*base.R) % m;
  base = base % m;
  while (n > 0) {
    if (n & 1) r = (r * base) % m;
    base = (base * base) % m;
    n >>= 1;
  }
  return r;
}

// Order: by degree, then coefficients compared from the top down. Requires a
// context less_elem(a, b); used for canonical sorting of factor lists.
template <class Ctx>
bool poly_less(const Poly<Ctx>& a, const Poly<Ctx>& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    if (!a.R->eq(a.c[i], b.c[i])) return a.R->less_elem(a.c[i], b.c[i]);
  }
  return false;
}

}  // namespace ffheight
