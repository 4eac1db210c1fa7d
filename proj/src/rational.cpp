#include "ffheight/rational.hpp"

namespace ffheight {

RationalFunction::RationalFunction(const TPoly& num)
    : num_(num), den_(TPoly::one(*num.R)) {}

RationalFunction::RationalFunction(const TPoly& num, const TPoly& den)
    : num_(num), den_(den) {
  check_same_ctx(num, den);
  if (den.is_zero())
    throw Error(ErrorKind::Domain, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  const FqCtx& F = *num_.R;
  if (num_.is_zero()) {
    den_ = TPoly::one(F);
    return;
  }
  TPoly g = poly_gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Fq lead = den_.lc();
  if (lead != F.one()) {
    Fq s = F.inv(lead);
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

Fq RationalFunction::constant_value() const {
  if (!is_constant())
    throw Error(ErrorKind::Domain, "constant_value of a non-constant element");
  return num_.get(0);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "division by zero in F_q(t)");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "inverse of zero in F_q(t)");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunction r = RationalFunction::one(field());
  RationalFunction base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

RationalFunction RationalFunction::frobenius_pow(int s) const {
  RationalFunction r = *this;
  r.num_ = tpoly_pth_power(num_, s);
  r.den_ = tpoly_pth_power(den_, s);
  // num/den coprime implies the powers are coprime; den stays monic.
  return r;
}

std::string format(const RationalFunction& x) {
  auto wrap = [](const TPoly& f) {
    std::string s = format(f);
    return (s.find('+') != std::string::npos) ? "(" + s + ")" : s;
  };
  if (x.den().deg() == 0) return format(x.num());
  return wrap(x.num()) + "/" + wrap(x.den());
}

}  // namespace ffheight
