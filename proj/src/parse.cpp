#include "ffheight/parse.hpp"

#include <cctype>

namespace ffheight {

namespace {

enum class Tok { Int, U, T, Tau, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  int pos;
  long long value = 0;  // integer literal or X index
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
    int pos = static_cast<int>(i);
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > (1LL << 40)) throw ParseError(pos, "integer literal too large");
        ++i;
      }
      out.push_back({Tok::Int, pos, v});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = i;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      std::string word = s.substr(start, i - start);
      if (word == "t") { out.push_back({Tok::T, pos}); continue; }
      if (word == "u") { out.push_back({Tok::U, pos}); continue; }
      if (word == "tau") { out.push_back({Tok::Tau, pos}); continue; }
      if (word == "X") {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError(pos, "expected a variable index after 'X'");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          v = v * 10 + (s[i] - '0');
          if (v > 64) throw ParseError(pos, "variable index too large");
          ++i;
        }
        if (v < 1) throw ParseError(pos, "variable indices start at X1");
        out.push_back({Tok::Var, pos, v});
        continue;
      }
      throw ParseError(pos, "unknown symbol '" + word + "'");
    }
    switch (ch) {
      case '+': out.push_back({Tok::Plus, pos}); break;
      case '-': out.push_back({Tok::Minus, pos}); break;
      case '*': out.push_back({Tok::Star, pos}); break;
      case '/': out.push_back({Tok::Slash, pos}); break;
      case '^': out.push_back({Tok::Caret, pos}); break;
      case '(': out.push_back({Tok::LParen, pos}); break;
      case ')': out.push_back({Tok::RParen, pos}); break;
      default: throw ParseError(pos, std::string("unexpected character '") + ch + "'");
    }
    ++i;
  }
  out.push_back({Tok::End, static_cast<int>(s.size())});
  return out;
}

struct Parser {
  const FqCtx& F;
  int tau_s;
  int nvars;       // > 0 only in multivariate mode
  bool tau_mode;
  bool multi_mode;
  const std::vector<Token>& toks;
  std::size_t ti = 0;

  using Val = ParsedElement;

  const Token& peek() const { return toks[ti]; }
  Token take() { return toks[ti++]; }

  [[noreturn]] static void fail(const std::string& msg, int pos) {
    throw ParseError(pos, msg);
  }

  static int domain(const Val& v) { return static_cast<int>(v.index()); }

  TwistedPoly as_twisted(const Val& v, int pos) const {
    if (std::holds_alternative<TwistedPoly>(v)) return std::get<TwistedPoly>(v);
    if (std::holds_alternative<RationalFunction>(v))
      return TwistedPoly::from_coeffs(F, tau_s, {std::get<RationalFunction>(v)});
    fail("cannot mix tau with X variables", pos);
  }

  MultiPoly as_multi(const Val& v, int pos) const {
    if (std::holds_alternative<MultiPoly>(v)) return std::get<MultiPoly>(v);
    if (std::holds_alternative<RationalFunction>(v))
      return MultiPoly::constant(F, nvars, std::get<RationalFunction>(v));
    fail("cannot mix tau with X variables", pos);
  }

  Val add_vals(const Val& a, const Val& b, bool subtract, int pos) const {
    int d = std::max(domain(a), domain(b));
    if (d == 0) {
      const auto& x = std::get<RationalFunction>(a);
      const auto& y = std::get<RationalFunction>(b);
      return subtract ? x - y : x + y;
    }
    if (d == 1) {
      TwistedPoly x = as_twisted(a, pos), y = as_twisted(b, pos);
      return subtract ? twisted_sub(x, y) : twisted_add(x, y);
    }
    MultiPoly x = as_multi(a, pos), y = as_multi(b, pos);
    return subtract ? x - y : x + y;
  }

  Val mul_vals(const Val& a, const Val& b, int pos) const {
    int d = std::max(domain(a), domain(b));
    if (d == 0)
      return std::get<RationalFunction>(a) * std::get<RationalFunction>(b);
    if (d == 1) return twisted_mul(as_twisted(a, pos), as_twisted(b, pos));
    return as_multi(a, pos) * as_multi(b, pos);
  }

  Val div_vals(const Val& a, const Val& b, int depth, int pos) const {
    if (!std::holds_alternative<RationalFunction>(a) ||
        !std::holds_alternative<RationalFunction>(b))
      fail("division is only defined between rational elements", pos);
    if (depth == 0 && (tau_mode || multi_mode))
      fail("division in a polynomial context must be parenthesized, e.g. (1/t)*tau",
           pos);
    const auto& y = std::get<RationalFunction>(b);
    if (y.is_zero()) fail("division by zero", pos);
    return std::get<RationalFunction>(a) * y.inverse();
  }

  Val neg_val(const Val& v) const {
    if (std::holds_alternative<RationalFunction>(v))
      return -std::get<RationalFunction>(v);
    if (std::holds_alternative<TwistedPoly>(v))
      return twisted_sub(TwistedPoly::zero(F, tau_s), std::get<TwistedPoly>(v));
    return -std::get<MultiPoly>(v);
  }

  Val pow_val(const Val& v, long long e, int pos) const {
    if (e < 0) fail("negative exponent", pos);
    if (e > 10000) fail("exponent too large", pos);
    if (std::holds_alternative<RationalFunction>(v))
      return std::get<RationalFunction>(v).pow(e);
    if (std::holds_alternative<TwistedPoly>(v)) {
      TwistedPoly r = TwistedPoly::one(F, tau_s);
      for (long long i = 0; i < e; ++i) r = twisted_mul(r, std::get<TwistedPoly>(v));
      return r;
    }
    MultiPoly r = MultiPoly::constant(F, nvars, RationalFunction::one(F));
    for (long long i = 0; i < e; ++i) r = r * std::get<MultiPoly>(v);
    return r;
  }

  Val expr(int depth) {
    Val v = term(depth);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = take();
      Val r = term(depth);
      v = add_vals(v, r, op.kind == Tok::Minus, op.pos);
    }
    return v;
  }

  Val term(int depth) {
    Val v = unary(depth);
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = take();
      Val r = unary(depth);
      v = (op.kind == Tok::Slash) ? div_vals(v, r, depth, op.pos)
                                  : mul_vals(v, r, op.pos);
    }
    return v;
  }

  Val unary(int depth) {
    if (peek().kind == Tok::Minus) {
      take();
      return neg_val(unary(depth));
    }
    return power(depth);
  }

  Val power(int depth) {
    Val v = atom(depth);
    while (peek().kind == Tok::Caret) {
      Token op = take();
      if (peek().kind != Tok::Int) fail("exponent must be an integer literal", op.pos);
      Token e = take();
      v = pow_val(v, e.value, e.pos);
    }
    return v;
  }

  Val atom(int depth) {
    Token tok = take();
    switch (tok.kind) {
      case Tok::Int:
        return RationalFunction::constant(F, F.from_int(tok.value));
      case Tok::U:
        if (F.e() < 2)
          fail("'u' is only defined when the field has a nontrivial generator (e >= 2)",
               tok.pos);
        return RationalFunction::constant(F, F.gen());
      case Tok::T:
        return RationalFunction::t(F);
      case Tok::Tau:
        return TwistedPoly::from_coeffs(
            F, tau_s, {RationalFunction::zero(F), RationalFunction::one(F)});
      case Tok::Var:
        return MultiPoly::variable(F, nvars, static_cast<int>(tok.value) - 1);
      case Tok::LParen: {
        Val v = expr(depth + 1);
        if (peek().kind != Tok::RParen) fail("missing closing parenthesis", peek().pos);
        take();
        return v;
      }
      default:
        fail("expected a value", tok.pos);
    }
  }
};

}  // namespace

ParsedElement parse_element(const FqCtx& F, const std::string& src, int tau_s) {
  std::vector<Token> toks = lex(src);
  bool tau_mode = false, multi_mode = false;
  int nvars = 0, tau_pos = -1, var_pos = -1;
  for (const Token& t : toks) {
    if (t.kind == Tok::Tau) { tau_mode = true; tau_pos = t.pos; }
    if (t.kind == Tok::Var) {
      multi_mode = true;
      var_pos = t.pos;
      nvars = std::max(nvars, static_cast<int>(t.value));
    }
  }
  if (tau_mode && multi_mode)
    throw ParseError(std::max(tau_pos, var_pos), "cannot mix tau with X variables");

  Parser P{F, tau_s, nvars, tau_mode, multi_mode, toks};
  ParsedElement v = P.expr(0);
  if (P.peek().kind != Tok::End)
    throw ParseError(P.peek().pos, "unexpected trailing input");
  return v;
}

RationalFunction parse_rational(const FqCtx& F, const std::string& src) {
  ParsedElement v = parse_element(F, src, F.e());
  if (!std::holds_alternative<RationalFunction>(v))
    throw ParseError(0, "expected a rational element (no tau or X)");
  return std::get<RationalFunction>(v);
}

TPoly parse_poly(const FqCtx& F, const std::string& src) {
  RationalFunction x = parse_rational(F, src);
  if (x.den().deg() != 0)
    throw ParseError(0, "expected a polynomial in t (no denominator)");
  return x.num();
}

TwistedPoly parse_twisted(const FqCtx& F, const std::string& src, int tau_s) {
  ParsedElement v = parse_element(F, src, tau_s);
  if (std::holds_alternative<MultiPoly>(v))
    throw ParseError(0, "expected a tau-polynomial, found X variables");
  if (std::holds_alternative<RationalFunction>(v))
    return TwistedPoly::from_coeffs(F, tau_s, {std::get<RationalFunction>(v)});
  return std::get<TwistedPoly>(v);
}

MultiPoly parse_multi(const FqCtx& F, const std::string& src) {
  ParsedElement v = parse_element(F, src, F.e());
  if (std::holds_alternative<TwistedPoly>(v))
    throw ParseError(0, "expected a polynomial in X variables, found tau");
  if (std::holds_alternative<RationalFunction>(v))
    return MultiPoly::constant(F, 1, std::get<RationalFunction>(v));
  return std::get<MultiPoly>(v);
}

}  // namespace ffheight
