#pragma once

#include <string>
#include <vector>

#include "ffheight/fq.hpp"
#include "ffheight/poly.hpp"

namespace ffheight {

// Polynomials in t over F_q.
using TPoly = Poly<FqCtx>;

struct FactorItem {
  TPoly prime;       // monic irreducible
  int multiplicity;  // >= 1
};

struct Factorization {
  Fq unit;                         // leading coefficient of the input
  std::vector<FactorItem> factors; // sorted by degree, then lexicographically
};

// Complete factorization over F_q[t]: squarefree decomposition (with p-th
// root extraction), distinct-degree splitting, then equal-degree splitting
// with a fixed-seed Cantor-Zassenhaus. Deterministic across runs.
Factorization factor(const TPoly& f);

// Multiplicity of a monic irreducible in f (f != 0).
int ord_at(const TPoly& f, const TPoly& prime);

// Exhaustive trial division for deg <= 4 at small q, Rabin's criterion above.
bool is_irreducible(const TPoly& f);

// g with g^p = f; requires every exponent with a nonzero coefficient to be
// divisible by p.
TPoly tpoly_pth_root(const TPoly& f);

// x -> x^{p^s} applied to every coefficient (the arithmetic Frobenius on
// constants; note this is NOT f(t)^{p^s}).
TPoly coeff_frobenius(const TPoly& f, int s);

// f(t)^{p^s}, computed in O(deg f): Frobenius on coefficients, exponents
// scaled by p^s.
TPoly tpoly_pth_power(const TPoly& f, int s);

// All monic polynomials of exactly the given degree, in index order.
std::vector<TPoly> monic_polys_of_degree(const FqCtx& F, int d);

// Index <-> polynomial with deg < len, index = sum coeff_i * q^i over element
// indices. Used by enumerations that need dense tables.
TPoly tpoly_from_index(const FqCtx& F, long long idx, int len);
long long tpoly_to_index(const TPoly& f, int len);

// Convenience for building small polynomials from integer coefficients
// (low-to-high), each reduced mod p.
TPoly tpoly_from_ints(const FqCtx& F, const std::vector<long long>& coeffs);

// Compact display, highest degree first: "t^3+2*t+1", "(u+1)*t^2+u".
std::string format(const TPoly& f);

// Same display with another variable name (operator polynomials print in T).
std::string format_var(const TPoly& f, const std::string& var);

}  // namespace ffheight
