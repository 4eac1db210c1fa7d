#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffheight/errors.hpp"

namespace ffheight {

// An element of F_q, represented by its index: the base-p digit vector of the
// residue class, packed as sum(c_i * p^i). Index 0 is 0, index 1 is 1, and
// (for e >= 2) index p is the class of u.
struct Fq {
  std::uint16_t v = 0;
  friend bool operator==(const Fq&, const Fq&) = default;
  friend auto operator<=>(const Fq&, const Fq&) = default;
};

// Session-level description of F_q = F_p[u]/(m(u)), q = p^e.
struct FieldConfig {
  long long p = 2;
  int e = 1;
  std::vector<int> modulus;  // m(u): length e+1, coefficients low-to-high, monic

  // Validates p (prime), e (1..4) and the modulus (monic irreducible of
  // degree e over F_p). With no modulus given, picks the lexicographically
  // smallest monic irreducible, coefficients compared low-to-high.
  static FieldConfig make(long long p, int e, std::vector<int> modulus = {});
};

// Table-backed arithmetic for F_q. Immutable after construction; all element
// operations are lookups, so sharing one context per session across threads
// is safe. Desk-scale guard: q <= 1024.
class FqCtx {
public:
  using Elem = Fq;

  explicit FqCtx(const FieldConfig& cfg);

  const FieldConfig& config() const { return cfg_; }
  long long p() const { return cfg_.p; }
  int e() const { return cfg_.e; }
  long long q() const { return q_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  // Class of u; only meaningful for e >= 2 (throws otherwise).
  Fq gen() const;

  bool is_zero(Fq a) const { return a.v == 0; }
  bool eq(Fq a, Fq b) const { return a == b; }
  bool less_elem(Fq a, Fq b) const { return a.v < b.v; }

  Fq add(Fq a, Fq b) const { return Fq{add_[idx(a, b)]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const { return Fq{mul_[idx(a, b)]}; }
  Fq neg(Fq a) const { return Fq{neg_[a.v]}; }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, long long n) const;

  // Frobenius x -> x^p and its iterates / inverse (x -> x^{p^{e-1}}).
  Fq frob(Fq a) const { return Fq{frob_[a.v]}; }
  Fq frob_pow(Fq a, int s) const;
  Fq pth_root(Fq a) const { return frob_pow(a, cfg_.e - 1); }

  // Subfield F_{p^s} (s | e): membership test x^{p^s} == x.
  bool in_subfield(Fq a, int s) const { return frob_pow(a, s) == a; }
  std::vector<Fq> subfield_elements(int s) const;

  // Integers map mod p; coefficient vectors are digits of u-powers.
  Fq from_int(long long n) const;
  Fq from_coeffs(const std::vector<long long>& c) const;
  std::vector<int> coeffs(Fq a) const;

  // Compact display as a polynomial in u: "0", "2", "u+1", "2*u^2+u".
  std::string format(Fq a) const;

private:
  std::size_t idx(Fq a, Fq b) const {
    return static_cast<std::size_t>(a.v) * q_ + b.v;
  }

  FieldConfig cfg_;
  long long q_ = 0;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_, frob_;
};

}  // namespace ffheight
