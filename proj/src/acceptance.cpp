#include "ffheight/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "ffheight/bogomolov.hpp"
#include "ffheight/drinfeld.hpp"
#include "ffheight/heights.hpp"
#include "ffheight/kummer.hpp"
#include "ffheight/northcott.hpp"

namespace ffheight {
namespace {

// Failure accumulator: counts every expectation, keeps the first failure
// message so a red line says what broke without drowning the report.
struct Check {
  long long checked = 0;
  std::string first_fail;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && first_fail.empty()) first_fail = what;
  }
  bool pass() const { return first_fail.empty(); }
};

Fq random_fq(const FqCtx& F, std::mt19937& rng) {
  return Fq{static_cast<std::uint16_t>(rng() % F.q())};
}

TPoly random_tpoly(const FqCtx& F, std::mt19937& rng, int maxdeg, bool nonzero) {
  for (;;) {
    int d = static_cast<int>(rng() % (maxdeg + 1));
    std::vector<Fq> c(d + 1);
    for (auto& e : c) e = random_fq(F, rng);
    TPoly f = TPoly::from_coeffs(F, c);
    if (!nonzero || !f.is_zero()) return f;
  }
}

RationalFunction random_rational(const FqCtx& F, std::mt19937& rng, int maxdeg,
                                 bool nonzero) {
  return RationalFunction(random_tpoly(F, rng, maxdeg, nonzero),
                          random_tpoly(F, rng, maxdeg, true));
}

DrinfeldModule carlitz_like(const FqCtx& F) {
  // phi_T = t tau + tau^3 over F_q(t), q_tau = p.
  RationalFunction z = RationalFunction::zero(F);
  return DrinfeldModule::make(TwistedPoly::from_coeffs(
      F, 1, {z, RationalFunction::t(F), z, RationalFunction::one(F)}));
}

// --- 1: the rank-3 module phi_T = t tau + tau^3 has hhat(1) = 1/p^3, and the
//        whole mass sits at infinity.
void crit_canonical_exact(Check& c) {
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    DrinfeldModule phi = carlitz_like(F);
    RationalFunction one = RationalFunction::one(F);
    Rat target(1, ipow(p, 3));
    for (int n = 1; n <= 3; ++n) {
      CanonicalHeightEstimate est = canonical_height(phi, one, n);
      c.expect(est.value == target, "canonical value off at p=" + std::to_string(p) +
                                        " n=" + std::to_string(n) + ": " +
                                        to_string(est.value));
      Rat lv = local_vw_estimate(phi, one, Place::infinity(F), n);
      c.expect(lv == -target, "local series at inf off at p=" + std::to_string(p) +
                                  " n=" + std::to_string(n) + ": " + to_string(lv));
    }
  }
}

// --- 2: sum over places of d(v) v(x) = 0.
void crit_sum_formula(Check& c) {
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    std::mt19937 rng(1000 + static_cast<unsigned>(p));
    for (int i = 0; i < 250; ++i) {
      RationalFunction x = random_rational(F, rng, 6, true);
      c.expect(sum_formula_check(x) == Rat(0),
               "sum formula nonzero at p=" + std::to_string(p) + " x=" + format(x));
    }
  }
}

// --- 3: the positive part of the divisor of t^{p^k} - t weighs exactly p^k,
//        matching -v_inf.
void crit_frobenius_place_sum(Check& c) {
  FqCtx F(FieldConfig::make(2, 1));
  for (int k = 1; k <= 4; ++k) {
    long long pk = 1LL << k;
    std::vector<Fq> v(pk + 1, F.zero());
    v[1] = F.neg(F.one());
    v[pk] = F.one();
    RationalFunction x(TPoly::from_coeffs(F, v));
    long long finite_sum = 0;
    for (const auto& [place, val] : place_support(x))
      if (!place.is_infinite && val > 0) finite_sum += place.degree() * val;
    long long vinf = valuation(x, Place::infinity(F));
    c.expect(finite_sum == pk && vinf == -pk,
             "k=" + std::to_string(k) + ": finite sum " + std::to_string(finite_sum) +
                 ", v_inf " + std::to_string(vinf));
  }
}

// --- 4: at a planted zero, either the height is >= 1/(2 deg f) or the twist
//        of the point stays a zero; audits re-derive the twist value.
void crit_dichotomy(Check& c) {
  int height_bound = 0, twist_vanishes = 0, total = 0;
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    std::mt19937 rng(4000 + static_cast<unsigned>(p));
    RationalFunction one = RationalFunction::one(F);

    auto record = [&](const DichotomyReport& rep) {
      ++total;
      (rep.branch == DichotomyBranch::HeightBound ? height_bound : twist_vanishes)++;
      c.expect(rep.audit.has_value() && rep.audit->sum_formula_ok,
               "audit missing or sum formula failed");
    };

    // Constant-coefficient f with a planted constant root: the twist of the
    // root is again a root.
    for (int i = 0; i < 50; ++i) {
      Fq r = random_fq(F, rng);
      MultiPoly X = MultiPoly::variable(F, 1, 0);
      MultiPoly lin = X - MultiPoly::constant(F, 1, RationalFunction::constant(F, r));
      MultiPoly g(F, 1);
      g.add_term({static_cast<int>(rng() % 3)},
                 RationalFunction::constant(F, Fq{static_cast<std::uint16_t>(
                                                   1 + rng() % (F.q() - 1))}));
      g.add_term({0}, RationalFunction::constant(F, random_fq(F, rng)));
      if (g.is_zero()) g = MultiPoly::constant(F, 1, one);
      try {
        record(dichotomy_check(make_reduced(lin * g),
                               {RationalFunction::constant(F, r)}, true));
      } catch (const Error& e) {
        c.expect(false, std::string("constant plant raised: ") + e.what());
      }
    }

    // Nonconstant univariate f = den(t) X - num(t) with the nonconstant root
    // num/den: the height bound branch must fire.
    for (int i = 0; i < 25; ++i) {
      RationalFunction r = random_rational(F, rng, 3, true);
      while (r.is_constant()) r = random_rational(F, rng, 3, true);
      MultiPoly f(F, 1);
      f.add_term({1}, RationalFunction(r.den()));
      f.add_term({0}, -RationalFunction(r.num()));
      try {
        DichotomyReport rep = dichotomy_check(make_reduced(f), {r}, true);
        record(rep);
        c.expect(rep.branch == DichotomyBranch::HeightBound,
                 "nonconstant root fell into the twist branch: " + format(r));
      } catch (const Error& e) {
        c.expect(false, std::string("linear plant raised: ") + e.what());
      }
    }

    // Bivariate plants f = X1 + c(t) X2 + e(t) with a computed zero.
    for (int i = 0; i < 25; ++i) {
      RationalFunction cc = random_rational(F, rng, 2, true);
      RationalFunction ee = random_rational(F, rng, 2, false);
      RationalFunction x2 = random_rational(F, rng, 2, false);
      RationalFunction x1 = -(cc * x2) - ee;
      MultiPoly f(F, 2);
      f.add_term({1, 0}, one);
      f.add_term({0, 1}, cc);
      if (!ee.is_zero()) f.add_term({0, 0}, ee);
      try {
        record(dichotomy_check(make_reduced(f), {x1, x2}, true));
      } catch (const Error& e) {
        c.expect(false, std::string("bivariate plant raised: ") + e.what());
      }
    }
  }
  c.expect(total == 200, "expected 200 instances, ran " + std::to_string(total));
  c.expect(height_bound >= 20,
           "height-bound branch count " + std::to_string(height_bound));
  c.expect(twist_vanishes >= 20,
           "twist-vanishes branch count " + std::to_string(twist_vanishes));
}

// --- 5: f divides its own Frobenius twist exactly for (scalar multiples of)
//        polynomials with coefficients in F_{p^k}.
void crit_constant_field(Check& c) {
  struct SessionPlan {
    long long p;
    int e;
    int k;
  };
  int positives = 0, negatives = 0;
  for (SessionPlan s : {SessionPlan{2, 2, 1}, SessionPlan{2, 4, 1},
                        SessionPlan{2, 4, 2}, SessionPlan{3, 2, 1}}) {
    FqCtx F(FieldConfig::make(s.p, s.e));
    std::mt19937 rng(5000 + static_cast<unsigned>(s.p * 10 + s.e * 2 + s.k));
    std::vector<Fq> sub = F.subfield_elements(s.k);
    std::vector<Fq> sub_nz(sub.begin() + 1, sub.end());  // drop 0

    for (int i = 0; i < 25; ++i) {
      int n = 1 + static_cast<int>(rng() % 2);
      MultiPoly f0(F, n);
      ExpVec top(n, 0);
      top[0] = 3;
      f0.add_term(top, RationalFunction::constant(F, sub_nz[rng() % sub_nz.size()]));
      for (int j = 0; j < 3; ++j) {
        ExpVec ev(n, 0);
        ev[0] = static_cast<int>(rng() % 3);  // strictly below the top term
        if (n == 2) ev[1] = static_cast<int>(rng() % 3);
        f0.add_term(ev, RationalFunction::constant(F, sub[rng() % sub.size()]));
      }
      RationalFunction lambda = random_rational(F, rng, 2, true);
      MultiPoly f = f0.scaled(lambda);
      try {
        CoefficientFieldResult res = coefficient_field_test(f, s.k);
        c.expect(res.divides && res.scaled.has_value(), "positive plant not recognized");
        if (res.scaled) {
          RationalFunction lead = f0.terms().rbegin()->second;
          c.expect(*res.scaled == f0.scaled(lead.inverse()),
                   "recovered form differs from the plant");
          bool insub = true;
          for (const auto& [ev, coef] : res.scaled->terms())
            insub = insub && coef.is_constant() &&
                    F.in_subfield(coef.constant_value(), s.k);
          c.expect(insub, "recovered coefficients leave F_{p^k}");
        }
      } catch (const Error& e) {
        c.expect(false, std::string("positive plant raised: ") + e.what());
      }
      ++positives;
    }

    for (int i = 0; i < 25; ++i) {
      MultiPoly f(F, 1);
      f.add_term({1}, RationalFunction::one(F));
      if (i % 2 == 0) {
        Fq cst;
        do cst = random_fq(F, rng);
        while (F.in_subfield(cst, s.k));
        f.add_term({0}, RationalFunction::constant(F, cst));
      } else {
        TPoly a = random_tpoly(F, rng, 3, true);
        while (a.deg() < 1) a = random_tpoly(F, rng, 3, true);
        f.add_term({0}, -RationalFunction(a));
      }
      CoefficientFieldResult res = coefficient_field_test(f, s.k);
      c.expect(!res.divides, "negative plant accepted: " + format(f));
      ++negatives;
    }
  }
  c.expect(positives == 100 && negatives == 100, "plant counts off");
}

// --- 6: the place-sum height equals the closed form, and the radical-tower
//        place analysis agrees with the minimal-polynomial height.
void crit_height_oracles(Check& c) {
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    std::mt19937 rng(6000 + static_cast<unsigned>(p));
    for (int i = 0; i < 250; ++i) {
      RationalFunction x = random_rational(F, rng, 5, false);
      c.expect(weil_height_rational(x).total == weil_height_closed_form(x),
               "height oracles disagree at " + format(x));
    }
  }

  struct RadicalPlan {
    long long p;
    int d;
    int count;
  };
  for (RadicalPlan plan : {RadicalPlan{2, 3, 20}, RadicalPlan{3, 2, 15},
                           RadicalPlan{3, 4, 15}}) {
    FqCtx F(FieldConfig::make(plan.p, 1));
    std::mt19937 rng(6100 + static_cast<unsigned>(plan.p * 10 + plan.d));
    int done = 0;
    while (done < plan.count) {
      TPoly g = random_tpoly(F, rng, 4, true);
      if (g.deg() < 1) continue;
      bool ok = false;
      for (const auto& item : factor(g).factors)
        if (std::gcd(item.multiplicity, plan.d) == 1) ok = true;
      if (!ok) continue;
      KummerResult kr = kummer_place_oracle(g, plan.d);
      std::vector<TPoly> mp(plan.d + 1, TPoly::zero(F));
      mp[0] = -g;
      mp[plan.d] = TPoly::one(F);
      Rat closed = weil_height_algebraic(AlgebraicElement::from_minpoly(mp));
      c.expect(kr.height == closed && closed == Rat(g.deg(), plan.d),
               "radical height mismatch for g=" + format(g) +
                   " d=" + std::to_string(plan.d));
      ++done;
    }
  }
}

// --- 7: modules with constant coefficients scale heights exactly, and the
//        estimator is already exact at every step.
void crit_finite_field_specialization(Check& c) {
  FqCtx F(FieldConfig::make(2, 2));  // F_4, q_tau = 4
  std::mt19937 rng(7000);
  RationalFunction z = RationalFunction::zero(F);
  TPoly T = TPoly::X(F);
  TPoly Tp1 = T + TPoly::one(F);
  TPoly T2 = T * T;
  for (int i = 0; i < 50; ++i) {
    int rank = 1 + static_cast<int>(i % 2);
    std::vector<RationalFunction> coeffs(rank + 1, z);
    coeffs[0] = RationalFunction::constant(F, random_fq(F, rng));
    for (int j = 1; j < rank; ++j)
      coeffs[j] = RationalFunction::constant(F, random_fq(F, rng));
    coeffs[rank] = RationalFunction::constant(
        F, Fq{static_cast<std::uint16_t>(1 + rng() % (F.q() - 1))});
    DrinfeldModule phi = DrinfeldModule::make(TwistedPoly::from_coeffs(F, 2, coeffs));
    RationalFunction x = random_rational(F, rng, rank == 2 ? 1 : 2, false);
    Rat h = weil_height_closed_form(x);

    for (const TPoly* a : {&T, &Tp1, &T2}) {
      Rat lhs = weil_height_closed_form(phi_apply(phi, *a, x));
      Rat rhs = Rat(ipow(4, rank * a->deg())) * h;
      c.expect(lhs == rhs, "specialization off: rank " + std::to_string(rank) +
                               " a=" + format(*a) + " x=" + format(x));
    }
    for (int n = 1; n <= 3; ++n) {
      CanonicalHeightEstimate est = canonical_height(phi, x, n, true);
      c.expect(est.exact && est.value == h,
               "estimator not exact: rank " + std::to_string(rank) +
                   " n=" + std::to_string(n) + " x=" + format(x));
    }
  }
}

// --- 8: enumeration vs independent brute-force scans, plus height
//        quantization over the full boxes.
void crit_northcott(Check& c) {
  const long long budget = 500000000;

  // Degree 1 at q=2: compare with a direct coprime-pair scan.
  {
    FqCtx F(FieldConfig::make(2, 1));
    for (Rat B : {Rat(0), Rat(1, 2), Rat(1)}) {
      long long D = rat_floor(B);
      long long count = 0;
      long long npolys = 1LL << (D + 1);  // all coefficient vectors, q = 2
      // Enumerate numerators (any poly of degree <= D, including 0) against
      // monic denominators of degree <= D.
      std::vector<TPoly> all, monic;
      std::vector<Fq> digits(D + 1);
      for (long long mask = 0; mask < npolys; ++mask) {
        for (long long b = 0; b <= D; ++b)
          digits[b] = Fq{static_cast<std::uint16_t>((mask >> b) & 1)};
        TPoly f = TPoly::from_coeffs(F, digits);
        all.push_back(f);
        if (!f.is_zero() && f.lc() == F.one()) monic.push_back(f);
      }
      for (const TPoly& num : all)
        for (const TPoly& den : monic) {
          if (num.is_zero() && den.deg() != 0) continue;
          if (!num.is_zero() && poly_gcd(num, den).deg() != 0) continue;
          if (Rat(std::max(num.deg(), den.deg())) <= B) ++count;
        }
      long long got = northcott_count(F, B, 1, budget);
      c.expect(got == count, "degree-1 count at B=" + to_string(B) + ": engine " +
                                 std::to_string(got) + " vs scan " +
                                 std::to_string(count));
    }
  }

  // Height 0 at degree 2: constants plus constant-coefficient irreducible
  // quadratics, counted directly.
  for (long long p : {2LL, 3LL}) {
    FqCtx F(FieldConfig::make(p, 1));
    long long quadratics = 0;
    for (long long a = 0; a < F.q(); ++a)
      for (long long b = 0; b < F.q(); ++b) {
        bool has_root = false;
        for (long long r = 0; r < F.q(); ++r) {
          Fq rr{static_cast<std::uint16_t>(r)};
          Fq val = F.add(F.add(F.mul(rr, rr), F.mul(Fq{static_cast<std::uint16_t>(a)}, rr)),
                         Fq{static_cast<std::uint16_t>(b)});
          if (F.is_zero(val)) has_root = true;
        }
        if (!has_root) ++quadratics;
      }
    long long expected = F.q() + quadratics;
    long long got = northcott_count(F, Rat(0), 2, budget);
    c.expect(got == expected, "height-0 degree-2 count at q=" + std::to_string(F.q()) +
                                  ": engine " + std::to_string(got) + " vs scan " +
                                  std::to_string(expected));
  }

  // Quantization: nothing sits strictly between height 0 and 1/degree.
  {
    FqCtx F(FieldConfig::make(2, 1));
    long long bad = 0, seen = 0;
    northcott_scan(F, Rat(2), 3, budget, [&](int deg, int maxc) {
      ++seen;
      if (maxc > 0 && Rat(maxc, deg) < Rat(1, deg)) ++bad;
    });
    c.expect(bad == 0, std::to_string(bad) + " elements below the height quantum");
    c.expect(seen > 0, "empty enumeration at q=2, B=2, d=3");
  }
  {
    FqCtx F(FieldConfig::make(3, 1));
    long long bad = 0;
    northcott_scan(F, Rat(1), 2, budget, [&](int deg, int maxc) {
      if (maxc > 0 && Rat(maxc, deg) < Rat(1, deg)) ++bad;
    });
    c.expect(bad == 0, std::to_string(bad) + " elements below the quantum at q=3");
  }
}

// --- 9: certificates from the descent, checked exhaustively below their
//        bounds, and a forged certificate is refuted.
void crit_descent(Check& c) {
  FqCtx F(FieldConfig::make(2, 1));
  RationalFunction one = RationalFunction::one(F);
  const long long budget = 100000000;

  {
    MultiPoly f(F, 2);  // X1 + X2 + t
    f.add_term({1, 0}, one);
    f.add_term({0, 1}, one);
    f.add_term({0, 0}, RationalFunction::t(F));
    ReducedPoly rf = make_reduced(f);
    DescentCertificate cert = descend(rf);
    c.expect(cert.C == Rat(1, 2) && cert.Z.empty,
             "X1+X2+t: got C=" + to_string(cert.C));
    VerifyReport vr = verify_certificate(rf, cert, 1, budget);
    c.expect(vr.verified && !vr.counterexample, "X1+X2+t certificate not verified");
  }

  {
    MultiPoly f(F, 2);  // X1*X2 + 1, constant coefficients
    f.add_term({1, 1}, one);
    f.add_term({0, 0}, one);
    ReducedPoly rf = make_reduced(f);
    DescentCertificate cert = descend(rf);
    c.expect(cert.C == Rat(1) && !cert.Z.empty && cert.Z.polys.size() == 1 &&
                 cert.Z.polys[0] == rf.base,
             "constant-coefficient certificate shape off");
    VerifyReport vr = verify_certificate(rf, cert, 1, budget);
    c.expect(vr.verified && vr.zeros_found > 0,
             "constant-coefficient certificate not verified");
  }

  {
    MultiPoly f(F, 1);  // t X^2 + (t+1) X + 1
    f.add_term({2}, RationalFunction::t(F));
    f.add_term({1}, RationalFunction(TPoly::X(F) + TPoly::one(F)));
    f.add_term({0}, one);
    ReducedPoly rf = make_reduced(f);
    DescentCertificate cert = descend(rf);
    MultiPoly locus(F, 1);  // X + 1 cuts out the planted root 1
    locus.add_term({1}, one);
    locus.add_term({0}, one);
    c.expect(cert.C == Rat(1, 4) && !cert.Z.empty && cert.Z.polys.size() == 1 &&
                 cert.Z.polys[0] == locus,
             "univariate certificate shape off: C=" + to_string(cert.C));
    VerifyReport vr = verify_certificate(rf, cert, 2, budget);
    c.expect(vr.verified && vr.zeros_found > 0, "univariate certificate not verified");
  }

  {
    MultiPoly f(F, 1);  // X + t, with a forged overlarge bound
    f.add_term({1}, one);
    f.add_term({0}, RationalFunction::t(F));
    ReducedPoly rf = make_reduced(f);
    DescentCertificate forged;
    forged.C = Rat(2);
    VerifyReport vr = verify_certificate(rf, forged, 2, budget);
    c.expect(!vr.verified && vr.counterexample.has_value(),
             "forged certificate was not refuted");
    if (vr.counterexample) {
      const auto& cx = *vr.counterexample;
      bool is_root = cx.size() == 1 &&
                     std::holds_alternative<RationalFunction>(cx[0]) &&
                     std::get<RationalFunction>(cx[0]) == RationalFunction::t(F);
      c.expect(is_root, "counterexample is not the planted root t");
    }
  }
}

// --- 10: torsion annihilator re-verified by evaluation; non-torsion point
//         certified by estimate minus error bound.
void crit_torsion(Check& c) {
  {
    FqCtx F(FieldConfig::make(2, 2));  // F_4, tau the 2-power Frobenius
    RationalFunction z = RationalFunction::zero(F);
    DrinfeldModule phi = DrinfeldModule::make(TwistedPoly::from_coeffs(
        F, 1, {z, RationalFunction::constant(F, F.gen())}));
    RationalFunction one = RationalFunction::one(F);
    TorsionResult tr = torsion_annihilator(phi, one);
    c.expect(tr.is_torsion && tr.annihilator.has_value(), "torsion point missed");
    if (tr.annihilator) {
      const TPoly& a = *tr.annihilator;
      c.expect(a.deg() >= 1 && a.lc() == F.one(), "annihilator not monic nontrivial");
      c.expect(phi_apply(phi, a, one).is_zero(), "annihilator fails re-evaluation");
    }
  }
  {
    FqCtx F(FieldConfig::make(2, 1));
    DrinfeldModule phi = carlitz_like(F);
    TorsionResult tr = torsion_annihilator(phi, RationalFunction::one(F), 12);
    c.expect(!tr.is_torsion, "non-torsion point flagged as torsion");
    c.expect(tr.height.value - tr.height.error_bound > Rat(0),
             "positive-height certificate too weak: value " + to_string(tr.height.value) +
                 " error " + to_string(tr.height.error_bound));
  }
}

struct Criterion {
  int id;
  const char* name;
  void (*fn)(Check&);
};

constexpr Criterion kCriteria[] = {
    {1, "canonical-height-exact-value", crit_canonical_exact},
    {2, "sum-formula", crit_sum_formula},
    {3, "frobenius-place-sum", crit_frobenius_place_sum},
    {4, "height-twist-dichotomy", crit_dichotomy},
    {5, "constant-field-recognition", crit_constant_field},
    {6, "height-oracle-agreement", crit_height_oracles},
    {7, "finite-field-specialization", crit_finite_field_specialization},
    {8, "northcott-completeness", crit_northcott},
    {9, "descent-certificates", crit_descent},
    {10, "torsion-certificates", crit_torsion},
};

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (const Criterion& cr : kCriteria) {
    CriterionResult r;
    r.id = cr.id;
    r.name = cr.name;
    Check chk;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(chk);
    } catch (const std::exception& e) {
      chk.expect(false, std::string("escaped exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.pass = chk.pass();
    r.detail = r.pass ? std::to_string(chk.checked) + " checks" : chk.first_fail;
    out.push_back(std::move(r));
  }
  return out;
}

int run_acceptance_suite(std::ostream& os) {
  int failures = 0;
  for (const CriterionResult& r : run_acceptance()) {
    char line[512];
    std::snprintf(line, sizeof(line), "%s %2d  %-30s  %s  (%.2f s)\n",
                  r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                  r.seconds);
    os << line;
    if (!r.pass) ++failures;
  }
  os << (failures == 0 ? "acceptance: all criteria passed\n"
                       : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
  return failures;
}

}  // namespace ffheight
