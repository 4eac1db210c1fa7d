#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffheight/extension.hpp"
#include "ffheight/heights.hpp"
#include "ffheight/multipoly.hpp"

namespace ffheight {

// Minimal k >= 1 with p^k >= 2 * height(f).
int choose_k(const ReducedPoly& f);

// The quotient b = (g^{p^k} - g) / (t^{p^k} - t), exact for g with
// coefficients in F_p; a nonzero remainder raises a Claim error (the identity
// is only guaranteed over the prime field).
TPoly claim_quotient(const TPoly& g, int k);

enum class DichotomyBranch { HeightBound, TwistVanishes };

// Cross-checked decompositions of zeta = f(x^{p^k}) at a rational zero of f:
// the telescoped form uses f(x) = 0 to rewrite zeta as
// sum_i (a_i - a_i^{p^k}) m_i^{p^k} over the terms a_i m_i of f, and the
// quotient form pulls out the common factor t^{p^k} - t. The quotient form
// needs every coefficient to divide exactly and is skipped (nullopt) when a
// coefficient has entries outside F_p.
struct DichotomyAudit {
  RationalFunction zeta_telescoped;
  std::optional<RationalFunction> zeta_quotient_form;
  bool sum_formula_ok;  // vacuously true when zeta = 0
};

struct DichotomyReport {
  DichotomyBranch branch;
  int k;
  Rat height_of_point;
  std::optional<RationalFunction> zeta;  // nonzero zeta at rational points
  std::optional<DichotomyAudit> audit;
};

// Either h(point) >= 1/(2 deg f) or f(point^{p^k}) = 0; the caller must hand
// in an exact zero of f. Audit recomputes zeta both alternative ways and
// checks its place sum; any disagreement raises a Claim error.
DichotomyReport dichotomy_check(const ReducedPoly& f,
                                const std::vector<RationalFunction>& point,
                                bool audit = false);

// Same dichotomy for a zero with coordinates in one simple extension.
DichotomyReport dichotomy_check_ext(const ReducedPoly& f, const SimpleExtCtx& E,
                                    const std::vector<Poly<RatFunCtx>>& point);

struct CoefficientFieldResult {
  bool divides;                    // f | frobenius_twist(f, k)
  std::optional<MultiPoly> scaled; // f over F_{p^k} after scaling, when divides
};

// Tests whether f divides its own twist; for irreducible f this happens
// exactly when some scalar multiple of f has all coefficients in F_{p^k}, and
// the scaled form is returned. If division succeeds but scaling leaves a
// coefficient outside F_{p^k}, f was reducible: Irreducibility error.
CoefficientFieldResult coefficient_field_test(const MultiPoly& f, int k);

// Resultant eliminating X_{var+1}: Sylvester determinant (f rows first) via
// fraction-free Bareiss elimination on denominator-cleared entries. For
// nvars >= 2 the variable is dropped from the result; a univariate input
// yields a polynomial that is constant in its single variable.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

// For univariate reduced f = sum_i d_i(X) t^i: the gcd G of the d_i over
// F_q[X] (variable rendered as X). Constants alpha are roots of f exactly
// when G(alpha) = 0; G of degree 0 means the constant locus is empty.
TPoly constant_locus_univariate(const ReducedPoly& f);

struct CertStep {
  std::string step;  // "constant-field" | "base" | "twist" | "resultant"
  int k;             // twist exponent where applicable, else 0
  std::string detail;
};

// A variety cut out by constant-coefficient polynomials; polys may live in
// fewer variables than the original f (trailing coordinates unconstrained).
struct ConstantVariety {
  bool empty = true;
  std::vector<MultiPoly> polys;
};

struct DescentCertificate {
  Rat C{0};
  ConstantVariety Z;
  std::vector<CertStep> trace;
};

// Produces (C, Z) intended so that every zero of f of height < C lies in Z:
// constant-coefficient f gives (1, V(f)); univariate f gives
// (1/(2 deg f), constant locus); otherwise eliminate the last variable
// against the Frobenius twist and recurse on the reduced resultant. A zero
// resultant is surfaced as Inconclusive (reducibility suspected), never
// papered over.
DescentCertificate descend(const ReducedPoly& f);

struct VerifyReport {
  long long points_checked = 0;
  long long zeros_found = 0;
  bool verified = false;
  std::optional<std::vector<Coordinate>> counterexample;
};

// Exhaustively checks the certificate below its height bound: every point
// with coordinate heights summing under cert.C (rational coordinates up to
// the degree bound; algebraic ones only in the univariate case) that
// annihilates f must lie in Z. Returns the first counterexample otherwise.
VerifyReport verify_certificate(const ReducedPoly& f, const DescentCertificate& cert,
                                int degree_bound, long long budget);

}  // namespace ffheight
