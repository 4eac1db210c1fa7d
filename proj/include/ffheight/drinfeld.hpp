#pragma once

#include <optional>
#include <string>

#include "ffheight/extension.hpp"
#include "ffheight/heights.hpp"

namespace ffheight {

// A twisted polynomial sum c_j tau^j over F_q(t), where tau is the q_tau-power
// Frobenius: tau * c = c^{q_tau} * tau. q_tau = p^s is a power of p with
// F_{q_tau} contained in F_q (s | e); by default the session q. Twisted
// polynomials act on F_q(t) (and its extensions) as additive maps
// x -> sum c_j x^{q_tau^j}.
struct TwistedPoly {
  const FqCtx* F = nullptr;
  int s = 1;                        // q_tau = p^s
  std::vector<RationalFunction> c;  // low-to-high in tau, trimmed

  long long qtau() const { return ipow(F->p(), s); }
  int deg_tau() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  RationalFunction get(int j) const {
    return (j >= 0 && j < static_cast<int>(c.size())) ? c[j]
                                                      : RationalFunction::zero(*F);
  }

  static TwistedPoly zero(const FqCtx& F, int s);
  static TwistedPoly one(const FqCtx& F, int s);
  static TwistedPoly from_coeffs(const FqCtx& F, int s,
                                 std::vector<RationalFunction> coeffs);
};

TwistedPoly twisted_add(const TwistedPoly& a, const TwistedPoly& b);
TwistedPoly twisted_sub(const TwistedPoly& a, const TwistedPoly& b);
// Non-commutative product: (c tau^i)(d tau^j) = c * d^{q_tau^i} tau^{i+j}.
TwistedPoly twisted_mul(const TwistedPoly& a, const TwistedPoly& b);
bool operator==(const TwistedPoly& a, const TwistedPoly& b);

// The additive action on F_q(t).
RationalFunction twisted_apply(const TwistedPoly& f, const RationalFunction& x);
// The same action on an extension element.
SimpleExtCtx::Elem twisted_apply_ext(const TwistedPoly& f, const SimpleExtCtx& L,
                                     const SimpleExtCtx::Elem& x);

// Ascending display: "t*tau + tau^3"; the tau^0 term prints as a bare
// coefficient.
std::string format(const TwistedPoly& f);

// A Drinfeld module over A = F_{q_tau}[T], determined by phi_T. The rank is
// deg_tau(phi_T); i(T) = the tau^0 coefficient.
struct DrinfeldModule {
  TwistedPoly phi_T;

  int rank() const { return phi_T.deg_tau(); }
  long long qtau() const { return phi_T.qtau(); }
  const FqCtx& field() const { return *phi_T.F; }
  RationalFunction i_T() const { return phi_T.get(0); }

  static DrinfeldModule make(TwistedPoly phi_T);  // requires rank >= 1
};

// True when every coefficient of phi_T is a constant (phi is then defined
// over the finite field F_q, and the canonical height equals the Weil
// height).
bool is_finite_field_module(const DrinfeldModule& phi);

// phi_a for a in F_{q_tau}[T] (coefficients must be constants lying in
// F_{q_tau}; checked). Ring morphism: phi_{ab} = phi_a phi_b.
TwistedPoly phi_image(const DrinfeldModule& phi, const TPoly& a);
RationalFunction phi_apply(const DrinfeldModule& phi, const TPoly& a,
                           const RationalFunction& x);

// One-step height drift bound: |h(phi_T(y)) - q_tau^r h(y)| <= B_phi for all
// y (in F_q(t) or any finite extension). Assembled place by place from the
// coefficient valuations; 0 exactly when the module is over the finite field.
Rat drift_bound(const DrinfeldModule& phi);

struct CanonicalHeightEstimate {
  Rat value{0};
  Rat error_bound{0};
  int iterations = 0;
  bool exact = false;  // error_bound == 0, so value is the canonical height
};

// n-step estimate h(phi_{T^n}(x)) / q_tau^{rn} with the geometric-series
// error bound B_phi / (q_tau^{rn} (1 - q_tau^{-r})). Finite-field modules
// short-circuit to the exact value h(x) unless force_iteration is set (the
// bound is 0 there either way).
CanonicalHeightEstimate canonical_height(const DrinfeldModule& phi,
                                         const RationalFunction& x, int iters,
                                         bool force_iteration = false);

// Same estimate for an element of a simple extension of F_q(t).
CanonicalHeightEstimate canonical_height_ext(const DrinfeldModule& phi,
                                             const SimpleExtCtx& L,
                                             const SimpleExtCtx::Elem& x,
                                             int iters);

// n-th term of the local series at w: d(w) * min(w(phi_{T^n}(x)), 0) / q_tau^{rn}.
// Nonpositive; the limit is -(local canonical height at w).
Rat local_vw_estimate(const DrinfeldModule& phi, const RationalFunction& x,
                      const Place& w, int iters);

struct TorsionResult {
  bool is_torsion = false;
  std::optional<TPoly> annihilator;  // monic in T, coefficients in F_{q_tau}
  CanonicalHeightEstimate height;    // certificate for the non-torsion case
};

// Decides torsion. Finite-field modules with constant x get the minimal
// monic annihilator by orbit linear algebra (degree <= [F_q : F_{q_tau}]);
// otherwise the point is certified non-torsion via value - error_bound > 0,
// growing the iteration count up to max_steps.
TorsionResult torsion_annihilator(const DrinfeldModule& phi,
                                  const RationalFunction& x, int max_steps = 12);

}  // namespace ffheight
