#include "ffheight/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "ffheight/errors.hpp"
#include "ffheight/rat.hpp"

namespace ffheight {

MultiPoly::MultiPoly(const FqCtx& F, int nvars) : F_(&F), n_(nvars) {
  if (nvars < 1) throw Error(ErrorKind::Domain, "need at least one variable");
}

MultiPoly MultiPoly::constant(const FqCtx& F, int nvars, const RationalFunction& c) {
  MultiPoly f(F, nvars);
  f.add_term(ExpVec(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(const FqCtx& F, int nvars, int var) {
  if (var < 0 || var >= nvars) throw Error(ErrorKind::Domain, "variable index out of range");
  MultiPoly f(F, nvars);
  ExpVec e(nvars, 0);
  e[var] = 1;
  f.add_term(e, RationalFunction::one(F));
  return f;
}

bool MultiPoly::is_constant() const { return total_degree() <= 0; }

bool MultiPoly::coefficients_constant() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

bool MultiPoly::coefficients_integral() const {
  for (const auto& [e, c] : terms_)
    if (c.den().deg() != 0) return false;
  return true;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::deg_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MultiPoly::add_term(const ExpVec& e, const RationalFunction& c) {
  if (static_cast<int>(e.size()) != n_)
    throw Error(ErrorKind::Domain, "exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*F_, n_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

static void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (&a.field() != &b.field() || a.nvars() != b.nvars())
    throw Error(ErrorKind::Domain, "mixed polynomial rings");
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  MultiPoly out(a.field(), a.nvars());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(a.nvars());
      for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scaled(const RationalFunction& c) const {
  MultiPoly out(*F_, n_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly out(*F_, n_);
  for (const auto& [e, c] : terms_)
    if (e[var] == k) {
      ExpVec e2 = e;
      e2[var] = 0;
      out.add_term(e2, c);
    }
  return out;
}

MultiPoly MultiPoly::drop_var(int var) const {
  if (n_ < 2) throw Error(ErrorKind::Domain, "cannot drop the last variable");
  MultiPoly out(*F_, n_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0)
      throw Error(ErrorKind::Domain, "polynomial still involves the dropped variable");
    ExpVec e2;
    for (int i = 0; i < n_; ++i)
      if (i != var) e2.push_back(e[i]);
    out.add_term(e2, c);
  }
  return out;
}

RationalFunction MultiPoly::eval(const std::vector<RationalFunction>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw Error(ErrorKind::Domain, "point dimension mismatch");
  RationalFunction acc = RationalFunction::zero(*F_);
  for (const auto& [e, c] : terms_) {
    RationalFunction term = c;
    for (int i = 0; i < n_; ++i)
      if (e[i] > 0) term = term * point[i].pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

MultiPoly frobenius_twist(const MultiPoly& f, int k) {
  if (k < 1) throw Error(ErrorKind::Domain, "twist exponent must be >= 1");
  long long pk = ipow(f.field().p(), k);
  MultiPoly out(f.field(), f.nvars());
  for (const auto& [e, c] : f.terms()) {
    ExpVec e2(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e2[i] = static_cast<int>(e[i] * pk);
    out.add_term(e2, c);
  }
  return out;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::Domain, "division by the zero polynomial");
  MultiPoly r = f;
  MultiPoly q(f.field(), f.nvars());
  const auto& glead = *g.terms().rbegin();  // lex-greatest term
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    ExpVec e(r.nvars());
    for (int i = 0; i < r.nvars(); ++i) {
      e[i] = rlead.first[i] - glead.first[i];
      if (e[i] < 0) return std::nullopt;
    }
    MultiPoly mono(f.field(), f.nvars());
    mono.add_term(e, rlead.second * glead.second.inverse());
    q = q + mono;
    r = r - mono * g;
  }
  return q;
}

std::string format(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << "X" << (i + 1);
      if (e[i] > 1) mono << "^" << e[i];
    }
    std::string cs = format(c);
    if (!any) {
      out << cs;
      continue;
    }
    if (cs != "1") {
      bool wrap = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
      if (wrap) out << "(" << cs << ")";
      else out << cs;
      out << "*";
    }
    out << mono.str();
  }
  return out.str();
}

ReducedPoly make_reduced(const MultiPoly& f) {
  if (f.is_zero() || f.is_constant())
    throw Error(ErrorKind::Domain, "reduction needs a nonconstant polynomial");
  const FqCtx& F = f.field();

  TPoly lcm = TPoly::one(F);
  for (const auto& [e, c] : f.terms()) {
    TPoly g = poly_gcd(lcm, c.den());
    lcm = (lcm / g) * c.den();
  }

  std::map<ExpVec, TPoly> nums;
  TPoly content = TPoly::zero(F);
  for (const auto& [e, c] : f.terms()) {
    RationalFunction cleared = c * RationalFunction(lcm, TPoly::one(F));
    nums.emplace(e, cleared.num());
    content = content.is_zero() ? cleared.num().monic() : poly_gcd(content, cleared.num());
  }

  Fq lead = F.one();
  {
    const TPoly& top = nums.rbegin()->second / content;
    lead = top.lc();
  }
  Fq scale = F.inv(lead);

  MultiPoly base(F, f.nvars());
  long long height = 0;
  for (const auto& [e, num] : nums) {
    TPoly a = (num / content).scaled(scale);
    height = std::max<long long>(height, a.deg());
    base.add_term(e, RationalFunction(a, TPoly::one(F)));
  }
  return ReducedPoly{base, height};
}

}  // namespace ffheight
