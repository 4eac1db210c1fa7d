#include "ffheight/bogomolov.hpp"

#include <algorithm>
#include <sstream>

#include "ffheight/northcott.hpp"

namespace ffheight {

int choose_k(const ReducedPoly& f) {
  long long p = f.base.field().p();
  long long target = 2 * f.height;
  int k = 1;
  long long pk = p;
  while (pk < target) { pk *= p; ++k; }
  return k;
}

TPoly claim_quotient(const TPoly& g, int k) {
  const FqCtx& F = *g.R;
  long long pk = ipow(F.p(), k);
  TPoly num = tpoly_pth_power(g, k) - g;
  TPoly den = poly_pow(TPoly::X(F), pk) - TPoly::X(F);
  auto [q, r] = divmod(num, den);
  if (!r.is_zero())
    throw Error(ErrorKind::Claim,
                "g^(p^k) - g is not divisible by t^(p^k) - t; the identity needs "
                "coefficients in F_p");
  return q;
}

namespace {

void check_dichotomy_bound(DichotomyReport& rep, int total_degree) {
  if (rep.branch == DichotomyBranch::HeightBound &&
      rep.height_of_point * Rat(2 * total_degree) < Rat(1))
    throw Error(ErrorKind::Claim,
                "dichotomy violated: nonzero twist value at a point below 1/(2d)");
}

}  // namespace

DichotomyReport dichotomy_check(const ReducedPoly& f,
                                const std::vector<RationalFunction>& point,
                                bool audit) {
  const MultiPoly& base = f.base;
  const FqCtx& F = base.field();
  if (static_cast<int>(point.size()) != base.nvars())
    throw Error(ErrorKind::Domain, "point dimension mismatch");
  if (!base.eval(point).is_zero())
    throw Error(ErrorKind::Precondition, "point is not a zero of f");

  DichotomyReport rep;
  rep.k = choose_k(f);
  std::vector<RationalFunction> twisted;
  twisted.reserve(point.size());
  for (const auto& x : point) twisted.push_back(x.frobenius_pow(rep.k));
  RationalFunction zeta = base.eval(twisted);

  rep.height_of_point = Rat(0);
  for (const auto& x : point) rep.height_of_point += weil_height_closed_form(x);
  if (zeta.is_zero()) {
    rep.branch = DichotomyBranch::TwistVanishes;
  } else {
    rep.branch = DichotomyBranch::HeightBound;
    rep.zeta = zeta;
  }
  check_dichotomy_bound(rep, base.total_degree());

  if (audit) {
    long long pk = ipow(F.p(), rep.k);
    DichotomyAudit au;
    RationalFunction telescoped = RationalFunction::zero(F);
    RationalFunction quotient_sum = RationalFunction::zero(F);
    bool quotient_ok = true;
    for (const auto& [e, a] : base.terms()) {
      RationalFunction mpk = RationalFunction::one(F);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) mpk = mpk * twisted[i].pow(e[i]);
      telescoped = telescoped + (a - a.frobenius_pow(rep.k)) * mpk;
      if (quotient_ok) {
        try {
          TPoly b = claim_quotient(a.num(), rep.k);
          quotient_sum = quotient_sum + RationalFunction(b, TPoly::one(F)) * mpk;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::Claim) throw;
          quotient_ok = false;  // coefficient outside F_p[t]
        }
      }
    }
    au.zeta_telescoped = telescoped;
    if (!(telescoped == zeta))
      throw Error(ErrorKind::Claim, "audit mismatch: telescoped zeta differs");
    if (quotient_ok) {
      TPoly tp = poly_pow(TPoly::X(F), pk) - TPoly::X(F);
      RationalFunction zq =
          -(RationalFunction(tp, TPoly::one(F)) * quotient_sum);
      au.zeta_quotient_form = zq;
      if (!(zq == zeta))
        throw Error(ErrorKind::Claim, "audit mismatch: quotient-form zeta differs");
    }
    au.sum_formula_ok = zeta.is_zero() || sum_formula_check(zeta) == Rat(0);
    if (!au.sum_formula_ok)
      throw Error(ErrorKind::Claim, "audit mismatch: zeta violates the sum formula");
    rep.audit = au;
  }
  return rep;
}

DichotomyReport dichotomy_check_ext(const ReducedPoly& f, const SimpleExtCtx& E,
                                    const std::vector<Poly<RatFunCtx>>& point) {
  const MultiPoly& base = f.base;
  if (static_cast<int>(point.size()) != base.nvars())
    throw Error(ErrorKind::Domain, "point dimension mismatch");

  auto eval_at = [&](const std::vector<Poly<RatFunCtx>>& pt) {
    auto acc = E.zero();
    for (const auto& [e, c] : base.terms()) {
      auto term = E.embed(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = E.mul(term, E.pow(pt[i], e[i]));
      acc = E.add(acc, term);
    }
    return acc;
  };

  if (!eval_at(point).is_zero())
    throw Error(ErrorKind::Precondition, "point is not a zero of f");

  DichotomyReport rep;
  rep.k = choose_k(f);
  std::vector<Poly<RatFunCtx>> twisted;
  twisted.reserve(point.size());
  for (const auto& z : point) twisted.push_back(E.frobenius_pow(z, rep.k));
  auto zeta = eval_at(twisted);

  rep.height_of_point = Rat(0);
  for (const auto& z : point) rep.height_of_point += E.elem_height(z);
  rep.branch = zeta.is_zero() ? DichotomyBranch::TwistVanishes
                              : DichotomyBranch::HeightBound;
  check_dichotomy_bound(rep, base.total_degree());
  return rep;
}

CoefficientFieldResult coefficient_field_test(const MultiPoly& f, int k) {
  if (f.is_zero() || f.is_constant())
    throw Error(ErrorKind::Domain, "test needs a nonconstant polynomial");
  if (k < 1) throw Error(ErrorKind::Domain, "twist exponent must be >= 1");

  auto q = exact_divide(frobenius_twist(f, k), f);
  if (!q) return {false, std::nullopt};

  const FqCtx& F = f.field();
  const RationalFunction& lead = f.terms().rbegin()->second;
  MultiPoly scaled = f.scaled(lead.inverse());
  for (const auto& [e, c] : scaled.terms()) {
    bool member = c.is_constant() &&
                  F.frob_pow(c.constant_value(), k) == c.constant_value();
    if (!member)
      throw Error(ErrorKind::Irreducibility,
                  "twist divisibility without a constant-field form: the input "
                  "polynomial was reducible");
  }
  return {true, scaled};
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (&f.field() != &g.field() || f.nvars() != g.nvars())
    throw Error(ErrorKind::Domain, "mixed polynomial rings");
  const FqCtx& F = f.field();
  int n = f.nvars();
  int df = f.deg_in(var), dg = g.deg_in(var);
  if (df < 1 || dg < 1)
    throw Error(ErrorKind::Domain,
                "resultant needs positive degree in the eliminated variable");

  auto den_lcm = [&](const MultiPoly& h) {
    TPoly l = TPoly::one(F);
    for (const auto& [e, c] : h.terms()) {
      TPoly cg = poly_gcd(l, c.den());
      l = (l / cg) * c.den();
    }
    return RationalFunction(l, TPoly::one(F));
  };
  RationalFunction Df = den_lcm(f), Dg = den_lcm(g);
  MultiPoly fc = f.scaled(Df), gc = g.scaled(Dg);

  int N = df + dg;
  MultiPoly zero = MultiPoly::zero(F, n);
  std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, zero));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) M[i][i + j] = fc.coeff_of(var, df - j);
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) M[dg + i][i + j] = gc.coeff_of(var, dg - j);

  auto finish = [&](MultiPoly det) {
    RationalFunction undo = (Df.pow(dg) * Dg.pow(df)).inverse();
    det = det.scaled(undo);
    if (n >= 2) det = det.drop_var(var);
    return det;
  };

  int sign = 1;
  MultiPoly prev = MultiPoly::constant(F, n, RationalFunction::one(F));
  for (int col = 0; col + 1 < N; ++col) {
    if (M[col][col].is_zero()) {
      int swap_row = -1;
      for (int i = col + 1; i < N; ++i)
        if (!M[i][col].is_zero()) { swap_row = i; break; }
      if (swap_row < 0)
        return (n >= 2) ? MultiPoly::zero(F, n - 1) : MultiPoly::zero(F, 1);
      std::swap(M[col], M[swap_row]);
      sign = -sign;
    }
    for (int i = col + 1; i < N; ++i) {
      for (int j = col + 1; j < N; ++j) {
        MultiPoly num = M[col][col] * M[i][j] - M[i][col] * M[col][j];
        auto qd = exact_divide(num, prev);
        if (!qd)
          throw Error(ErrorKind::Claim, "fraction-free elimination lost exactness");
        M[i][j] = *qd;
      }
      M[i][col] = zero;
    }
    prev = M[col][col];
  }
  MultiPoly det = M[N - 1][N - 1];
  if (sign < 0) det = -det;
  return finish(det);
}

TPoly constant_locus_univariate(const ReducedPoly& f) {
  const MultiPoly& base = f.base;
  if (base.nvars() != 1)
    throw Error(ErrorKind::Domain, "constant locus applies to univariate f");
  const FqCtx& F = base.field();

  int tdeg = 0, xdeg = 0;
  for (const auto& [e, c] : base.terms()) {
    tdeg = std::max(tdeg, c.num().deg());
    xdeg = std::max(xdeg, e[0]);
  }

  TPoly G = TPoly::zero(F);
  for (int i = 0; i <= tdeg; ++i) {
    // d_i(X) = sum over terms of (coefficient of t^i) X^j
    std::vector<Fq> coeffs(xdeg + 1, F.zero());
    for (const auto& [e, c] : base.terms()) coeffs[e[0]] = c.num().get(i);
    TPoly di = TPoly::from_coeffs(F, coeffs);
    if (di.is_zero()) continue;
    G = G.is_zero() ? di.monic() : poly_gcd(G, di);
    if (G.deg() == 0) break;
  }
  return G;
}

namespace {

DescentCertificate descend_impl(const ReducedPoly& f) {
  const MultiPoly& base = f.base;
  const FqCtx& F = base.field();
  int n = base.nvars();
  int d = base.total_degree();
  DescentCertificate cert;

  if (base.coefficients_constant()) {
    cert.C = Rat(1);
    cert.Z.empty = false;
    cert.Z.polys = {base};
    cert.trace.push_back({"constant-field", 0, "all coefficients in F_q; Z = V(f)"});
    return cert;
  }

  if (n == 1) {
    TPoly G = constant_locus_univariate(f);
    cert.C = Rat(1, 2 * d);
    if (G.deg() >= 1) {
      cert.Z.empty = false;
      MultiPoly zp(F, 1);
      for (int i = 0; i <= G.deg(); ++i) {
        RationalFunction c(TPoly::constant(F, G.get(i)), TPoly::one(F));
        zp.add_term({i}, c);
      }
      cert.Z.polys = {zp};
    }
    cert.trace.push_back({"base", 0, "constant locus gcd = " + format_var(G, "X1")});
    return cert;
  }

  int last = n - 1;
  if (base.deg_in(last) <= 0) {
    cert.trace.push_back({"base", 0,
                          "f is free of X" + std::to_string(n) +
                              "; descending in the remaining variables"});
    DescentCertificate rec = descend_impl(make_reduced(base.drop_var(last)));
    cert.C = rec.C;
    cert.Z = rec.Z;
    cert.trace.insert(cert.trace.end(), rec.trace.begin(), rec.trace.end());
    return cert;
  }

  int k = choose_k(f);
  MultiPoly tw = frobenius_twist(base, k);
  cert.trace.push_back({"twist", k, format(tw)});
  MultiPoly R = resultant(base, tw, last);
  cert.trace.push_back({"resultant", k, format(R)});
  if (R.is_zero())
    throw Error(ErrorKind::Inconclusive,
                "zero resultant against the twist: requires factorization");

  Rat own(1, 2 * d);
  if (R.is_constant()) {
    cert.C = own;
    cert.Z.empty = true;
    cert.trace.push_back(
        {"base", 0, "resultant has no variables; twist-vanishing locus is empty"});
    return cert;
  }

  DescentCertificate rec = descend_impl(make_reduced(R));
  cert.C = std::min(own, rec.C);
  cert.Z = rec.Z;
  cert.trace.insert(cert.trace.end(), rec.trace.begin(), rec.trace.end());
  return cert;
}

}  // namespace

DescentCertificate descend(const ReducedPoly& f) {
  int n = f.base.nvars();
  if (n > 3)
    throw Error(ErrorKind::Unsupported, "descent handles at most three variables");
  if (f.base.is_zero() || f.base.is_constant())
    throw Error(ErrorKind::Domain, "descent needs a nonconstant polynomial");
  return descend_impl(f);
}

namespace {

Poly<RatFunCtx> univariate_over_ratfun(const MultiPoly& h, const RatFunCtx& K) {
  int deg = h.deg_in(0);
  std::vector<RationalFunction> coeffs(std::max(deg + 1, 1),
                                       RationalFunction::zero(K.base()));
  for (const auto& [e, c] : h.terms()) coeffs[e[0]] = c;
  return Poly<RatFunCtx>::from_coeffs(K, coeffs);
}

Poly<RatFunCtx> monic_minpoly(const AlgebraicElement& a, const RatFunCtx& K) {
  std::vector<RationalFunction> coeffs;
  for (const auto& c : a.coeffs)
    coeffs.emplace_back(c, TPoly::one(K.base()));
  return Poly<RatFunCtx>::from_coeffs(K, coeffs).monic();
}

}  // namespace

VerifyReport verify_certificate(const ReducedPoly& f, const DescentCertificate& cert,
                                int degree_bound, long long budget) {
  const MultiPoly& base = f.base;
  const FqCtx& F = base.field();
  int n = base.nvars();
  if (cert.C <= Rat(0)) throw Error(ErrorKind::Domain, "certificate bound must be positive");
  int d = (n == 1) ? degree_bound : 1;  // algebraic coordinates only for n = 1

  std::vector<Coordinate> cands = northcott_enumerate(F, cert.C, d, budget);
  std::vector<Rat> hs;
  hs.reserve(cands.size());
  for (const auto& c : cands) hs.push_back(coordinate_height(c));

  __int128 combos = 1;
  for (int i = 0; i < n; ++i) combos *= static_cast<__int128>(cands.size());
  if (combos > budget)
    throw Error(ErrorKind::Budget, "certificate verification grid exceeds the budget");

  RatFunCtx K(F);
  auto vanishes_at_algebraic = [&](const MultiPoly& h, const AlgebraicElement& a) {
    Poly<RatFunCtx> u = univariate_over_ratfun(h, K);
    Poly<RatFunCtx> m = monic_minpoly(a, K);
    return (u % m).is_zero();
  };

  auto in_variety = [&](const std::vector<std::size_t>& pick) {
    if (cert.Z.empty) return false;
    for (const MultiPoly& zp : cert.Z.polys) {
      int m = zp.nvars();  // constraints apply to the leading coordinates
      bool all_rational = true;
      for (int i = 0; i < m; ++i)
        if (!std::holds_alternative<RationalFunction>(cands[pick[i]]))
          all_rational = false;
      if (all_rational) {
        std::vector<RationalFunction> sub;
        for (int i = 0; i < m; ++i)
          sub.push_back(std::get<RationalFunction>(cands[pick[i]]));
        if (!zp.eval(sub).is_zero()) return false;
      } else {
        const auto& a = std::get<AlgebraicElement>(cands[pick[0]]);
        if (!vanishes_at_algebraic(zp, a)) return false;
      }
    }
    return true;
  };

  VerifyReport rep;
  rep.verified = true;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Rat hsum(0);
    for (int i = 0; i < n; ++i) hsum += hs[pick[i]];
    if (hsum < cert.C) {
      ++rep.points_checked;
      bool all_rational = true;
      for (int i = 0; i < n; ++i)
        if (!std::holds_alternative<RationalFunction>(cands[pick[i]]))
          all_rational = false;
      bool is_zero;
      if (all_rational) {
        std::vector<RationalFunction> pt;
        for (int i = 0; i < n; ++i)
          pt.push_back(std::get<RationalFunction>(cands[pick[i]]));
        is_zero = base.eval(pt).is_zero();
      } else {
        const auto& a = std::get<AlgebraicElement>(cands[pick[0]]);
        is_zero = vanishes_at_algebraic(base, a);
      }
      if (is_zero) {
        ++rep.zeros_found;
        if (!in_variety(pick)) {
          rep.verified = false;
          std::vector<Coordinate> pt;
          for (int i = 0; i < n; ++i) pt.push_back(cands[pick[i]]);
          rep.counterexample = pt;
          return rep;
        }
      }
    }
    int pos = 0;
    while (pos < n && ++pick[pos] == cands.size()) pick[pos++] = 0;
    if (pos == n) break;
  }
  return rep;
}

}  // namespace ffheight
