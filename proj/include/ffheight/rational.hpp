#pragma once

#include <string>

#include "ffheight/tpoly.hpp"

namespace ffheight {

// An element of F_q(t), kept in lowest terms with a monic denominator; that
// representative is unique, so operator== is structural.
class RationalFunction {
public:
  RationalFunction() = default;  // unusable until assigned; no context
  explicit RationalFunction(const TPoly& num);
  RationalFunction(const TPoly& num, const TPoly& den);

  static RationalFunction zero(const FqCtx& F) { return RationalFunction(TPoly::zero(F)); }
  static RationalFunction one(const FqCtx& F) { return RationalFunction(TPoly::one(F)); }
  static RationalFunction t(const FqCtx& F) { return RationalFunction(TPoly::X(F)); }
  static RationalFunction constant(const FqCtx& F, Fq c) {
    return RationalFunction(TPoly::constant(F, c));
  }

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  const FqCtx& field() const { return *num_.R; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }
  Fq constant_value() const;

  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&);
  friend bool operator==(const RationalFunction&, const RationalFunction&);

  RationalFunction inverse() const;
  RationalFunction pow(long long n) const;
  // x -> x^{p^s} (field Frobenius), in O(deg).
  RationalFunction frobenius_pow(int s) const;

private:
  void normalize();

  TPoly num_, den_;
};

std::string format(const RationalFunction& x);

// F_q(t) as an arithmetic context for the generic polynomial template.
class RatFunCtx {
public:
  using Elem = RationalFunction;

  explicit RatFunCtx(const FqCtx& F) : F_(&F) {}
  const FqCtx& base() const { return *F_; }

  // Any two RatFunCtx over the same field denote the same ring F_q(t).
  friend const void* ctx_key(const RatFunCtx& c) { return c.F_; }

  Elem zero() const { return RationalFunction::zero(*F_); }
  Elem one() const { return RationalFunction::one(*F_); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }

private:
  const FqCtx* F_;
};

}  // namespace ffheight
