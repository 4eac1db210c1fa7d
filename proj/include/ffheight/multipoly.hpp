#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ffheight/rational.hpp"

namespace ffheight {

// Exponent vector for X_1..X_n; std::vector's lexicographic < is the
// monomial order used throughout (division, leading terms, formatting).
using ExpVec = std::vector<int>;

// Sparse polynomial in X_1..X_n over F_q(t). Zero coefficients are never
// stored; the zero polynomial has an empty term map.
class MultiPoly {
public:
  MultiPoly(const FqCtx& F, int nvars);

  static MultiPoly zero(const FqCtx& F, int nvars) { return MultiPoly(F, nvars); }
  static MultiPoly constant(const FqCtx& F, int nvars, const RationalFunction& c);
  static MultiPoly variable(const FqCtx& F, int nvars, int var);  // X_{var+1}

  const FqCtx& field() const { return *F_; }
  int nvars() const { return n_; }
  const std::map<ExpVec, RationalFunction>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // No term touches any variable (a scalar of F_q(t), possibly zero).
  bool is_constant() const;
  // Every coefficient lies in the constant field F_q.
  bool coefficients_constant() const;
  // Every coefficient lies in F_q[t] (polynomial, monic denominator 1).
  bool coefficients_integral() const;

  int total_degree() const;      // -1 for the zero polynomial
  int deg_in(int var) const;     // -1 for the zero polynomial

  void add_term(const ExpVec& e, const RationalFunction& c);  // accumulates

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const RationalFunction& c) const;

  // Coefficient of X_{var+1}^k, as a polynomial with that exponent zeroed.
  MultiPoly coeff_of(int var, int k) const;

  // Drop variable `var` (its exponent must be zero in every term) producing a
  // polynomial in one fewer variable.
  MultiPoly drop_var(int var) const;

  RationalFunction eval(const std::vector<RationalFunction>& point) const;

private:
  const FqCtx* F_;
  int n_;
  std::map<ExpVec, RationalFunction> terms_;
};

// Substitution X_i <- X_i^{p^k}; coefficients unchanged.
MultiPoly frobenius_twist(const MultiPoly& f, int k);

// Quotient f/g when g divides f exactly (single-divisor division along the
// lexicographic leading term); nullopt as soon as a leading term fails to
// divide, which certifies a nonzero remainder.
std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g);

// Terms in descending lexicographic order, " + " separated, e.g.
// "t*X1^2*X2 + (t^2+1)*X2 + 1".
std::string format(const MultiPoly& f);

// A nonzero polynomial with coprime F_q[t] coefficients; height is the
// maximum coefficient degree (equivalently the place-sum of coefficient-tuple
// local heights: finite places drop out by coprimality).
struct ReducedPoly {
  MultiPoly base;
  long long height;
};

// Clears denominators, divides out the coefficient content, and makes the
// lexicographic leading coefficient monic; rejects zero and constant inputs.
ReducedPoly make_reduced(const MultiPoly& f);

}  // namespace ffheight
