#pragma once

#include "ffheight/rat.hpp"
#include "ffheight/rational.hpp"

namespace ffheight {

// The residue field F_q[t]/(P) for a monic irreducible P, as an arithmetic
// context (elements are representatives of degree < deg P).
class QuotCtx {
public:
  using Elem = TPoly;

  explicit QuotCtx(const TPoly& P);

  const TPoly& modulus() const { return P_; }
  const FqCtx& base() const { return *P_.R; }
  long long order() const;  // q^{deg P}

  Elem reduce(const TPoly& a) const { return a % P_; }
  Elem zero() const { return TPoly::zero(base()); }
  Elem one() const { return TPoly::one(base()); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % P_; }
  Elem inv(const Elem& a) const;

private:
  TPoly P_;
};

// The ring F_q(t)[theta]/(M(theta)) for a monic squarefree (separable) M.
// Elements are residue representatives of degree < deg M. A field whenever M
// is irreducible; the consistency checks that need inverses are not used
// otherwise.
class SimpleExtCtx {
public:
  using Elem = Poly<RatFunCtx>;

  SimpleExtCtx(const FqCtx& F, const Poly<RatFunCtx>& modulus);

  const RatFunCtx& scalars() const { return K_; }
  const Poly<RatFunCtx>& modulus() const { return M_; }
  int degree() const { return M_.deg(); }

  Elem zero() const { return Elem::zero(K_); }
  Elem one() const { return Elem::one(K_); }
  Elem theta() const { return reduce(Elem::X(K_)); }
  Elem embed(const RationalFunction& a) const { return Elem::constant(K_, a); }
  Elem reduce(const Elem& a) const { return a % M_; }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % M_; }
  Elem pow(const Elem& a, long long n) const;
  Elem frobenius_pow(const Elem& a, int s) const;  // a^{p^s}

  // Characteristic polynomial of multiplication-by-a (monic, degree = deg M),
  // by cofactor expansion of det(Y*I - A) — fine at extension degree <= 4.
  Poly<RatFunCtx> charpoly(const Elem& a) const;

  // Height of a: clear denominators of charpoly(a), normalize content, then
  // max coefficient degree / extension degree. Agrees with the minimal
  // polynomial height because both content and max-degree are multiplicative.
  Rat elem_height(const Elem& a) const;

private:
  RatFunCtx K_;
  Poly<RatFunCtx> M_;
};

}  // namespace ffheight
