#include "ffheight/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffheight/acceptance.hpp"
#include "ffheight/bogomolov.hpp"
#include "ffheight/drinfeld.hpp"
#include "ffheight/heights.hpp"
#include "ffheight/northcott.hpp"
#include "ffheight/parse.hpp"

namespace ffheight {
namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Small formatting helpers. Everything emitted here must be deterministic:
// the JSON reports are golden-tested byte for byte.

std::string modulus_string(const FieldConfig& cfg) {
  std::string out;
  for (int i = static_cast<int>(cfg.modulus.size()) - 1; i >= 0; --i) {
    int c = cfg.modulus[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      std::string pw = (i == 1) ? "u" : "u^" + std::to_string(i);
      out += (c == 1) ? pw : std::to_string(c) + "*" + pw;
    }
  }
  return out.empty() ? "0" : out;
}

std::string maybe_paren(const std::string& s) {
  if (s.find('+') != std::string::npos || s.find('/') != std::string::npos)
    return "(" + s + ")";
  return s;
}

// Minimal polynomial display for an algebraic element, descending in X:
// "X^2 + X + t", "t*X^2 + (t+1)*X + 1".
std::string minpoly_string(const AlgebraicElement& a) {
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const TPoly& c = a.coeffs[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = format(c);
    if (i == 0) {
      out += maybe_paren(cs);
      continue;
    }
    std::string xs = (i == 1) ? "X" : "X^" + std::to_string(i);
    out += (cs == "1") ? xs : maybe_paren(cs) + "*" + xs;
  }
  return out.empty() ? "0" : out;
}

Json coordinate_json(const Coordinate& c) {
  Json j;
  if (const auto* rf = std::get_if<RationalFunction>(&c)) {
    j["degree"] = 1;
    j["height"] = to_string(coordinate_height(c));
    j["value"] = format(*rf);
  } else {
    const auto& alg = std::get<AlgebraicElement>(c);
    j["degree"] = alg.degree();
    j["height"] = to_string(coordinate_height(c));
    j["minpoly"] = minpoly_string(alg);
  }
  return j;
}

Json estimate_json(const CanonicalHeightEstimate& est) {
  Json j;
  j["value"] = to_string(est.value);
  j["error_bound"] = to_string(est.error_bound);
  j["iterations"] = est.iterations;
  j["exact"] = est.exact;
  return j;
}

// "a" or "a/b" with integer parts; used for height bounds handed in as flags.
Rat parse_rat_string(const std::string& s) {
  auto bad = [&]() -> Rat {
    throw Error(ErrorKind::Domain, "expected a rational 'a' or 'a/b', got '" + s + "'");
  };
  try {
    std::size_t pos = 0;
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
      long long a = std::stoll(s, &pos);
      if (pos != s.size()) return bad();
      return Rat(a);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    long long a = std::stoll(num, &pos);
    if (pos != num.size()) return bad();
    long long b = std::stoll(den, &pos);
    if (pos != den.size() || b <= 0) return bad();
    return Rat(a, b);
  } catch (const std::invalid_argument&) {
    return bad();
  } catch (const std::out_of_range&) {
    return bad();
  }
}

Place parse_place(const FqCtx& F, const std::string& s) {
  if (s == "inf" || s == "infty" || s == "infinity") return Place::infinity(F);
  return Place::finite(parse_poly(F, s));
}

// Whitespace-split with single/double quoting, for batch lines.
std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted_token = false;
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quote != 0) {
      if (ch == quote)
        quote = 0;
      else
        cur += ch;
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      quoted_token = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty() || quoted_token) {
        out.push_back(cur);
        cur.clear();
        quoted_token = false;
      }
    } else {
      cur += ch;
    }
  }
  if (quote != 0) throw ParseError(line.size(), "unterminated quote in batch line");
  if (!cur.empty() || quoted_token) out.push_back(cur);
  return out;
}

// Plain-text rendering: one "key = value" line per payload entry; compound
// values stay as compact JSON. The JSON mode is the product, this is a
// convenience view.
std::string plain_render(const Json& j) {
  std::string out;
  for (const auto& [key, val] : j.items()) {
    if (key == "command" || key == "field" || key == "inputs") continue;
    out += key;
    out += " = ";
    out += val.is_string() ? val.get<std::string>() : val.dump();
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Session plumbing shared by every subcommand.

struct Session {
  std::unique_ptr<FqCtx> F;
  int tau_s = 1;  // q_tau = p^tau_s
  long long budget = 10000000;
  bool plain = false;
};

int tau_s_from_q(const FqCtx& F, long long tau_q) {
  if (tau_q == 0) return F.e();  // default: the session q
  long long v = 1;
  int s = 0;
  while (v < tau_q) {
    v *= F.p();
    ++s;
  }
  if (v != tau_q || s < 1)
    throw Error(ErrorKind::Domain,
                "--tau-q must be a positive power of p, got " + std::to_string(tau_q));
  if (F.e() % s != 0)
    throw Error(ErrorKind::Domain,
                "--tau-q = p^" + std::to_string(s) +
                    " does not define a subfield of F_q (needs s | e)");
  return s;
}

std::vector<int> parse_modulus_flag(const std::string& s) {
  // Comma-separated F_p digits, low to high: "1,1,1" is u^2+u+1.
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t pos = 0;
    try {
      out.push_back(static_cast<int>(std::stoll(part, &pos)));
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != part.size())
      throw Error(ErrorKind::Domain,
                  "--modulus wants comma-separated coefficients low to high, got '" + s + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Json field_json(const FqCtx& F) {
  Json j;
  j["p"] = F.p();
  j["e"] = F.e();
  j["q"] = F.q();
  if (F.e() >= 2) j["modulus"] = modulus_string(F.config());
  return j;
}

Json envelope(const std::string& command, const Session& S) {
  Json j;
  j["command"] = command;
  j["field"] = field_json(*S.F);
  return j;
}

std::vector<RationalFunction> parse_point_list(const FqCtx& F, const std::string& s) {
  std::vector<RationalFunction> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string part =
        s.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(parse_rational(F, part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand argument bags.

struct Args {
  // global
  long long p = 2;
  int e = 1;
  std::string modulus;
  long long budget = 10000000;
  long long tau_q = 0;
  bool plain = false;

  // per-command inputs (shared names across commands)
  std::string x, phi, f, place, point, C, bound;
  int iters = 6;
  int degree = 1;
  bool degree_given = false;
  int max_steps = 12;
  int limit = 100;
  bool audit = false;
  bool force_iteration = false;
  bool z_empty = false;
};

Json cmd_height(const Session& S, const Args& A) {
  RationalFunction x = parse_rational(*S.F, A.x);
  HeightReport rep = weil_height_rational(x);
  Json j = envelope("height", S);
  j["inputs"] = Json{{"x", format(x)}};
  j["total"] = to_string(rep.total);
  Json locals = Json::array();
  for (const auto& L : rep.locals) {
    Json item;
    item["place"] = format(L.place);
    item["degree"] = L.place.degree();
    item["h"] = to_string(L.h);
    locals.push_back(std::move(item));
  }
  j["locals"] = std::move(locals);
  j["exact"] = true;
  return j;
}

Json cmd_canonical_height(const Session& S, const Args& A) {
  TwistedPoly pt = parse_twisted(*S.F, A.phi, S.tau_s);
  DrinfeldModule phi = DrinfeldModule::make(pt);
  RationalFunction x = parse_rational(*S.F, A.x);
  CanonicalHeightEstimate est =
      canonical_height(phi, x, A.iters, A.force_iteration);
  Json j = envelope("canonical-height", S);
  Json in;
  in["phi"] = format(pt);
  in["x"] = format(x);
  in["iters"] = A.iters;
  in["tau_q"] = phi.qtau();
  j["inputs"] = std::move(in);
  j.update(estimate_json(est));
  return j;
}

Json cmd_local_vw(const Session& S, const Args& A) {
  TwistedPoly pt = parse_twisted(*S.F, A.phi, S.tau_s);
  DrinfeldModule phi = DrinfeldModule::make(pt);
  RationalFunction x = parse_rational(*S.F, A.x);
  Place w = parse_place(*S.F, A.place);
  Rat est = local_vw_estimate(phi, x, w, A.iters);
  Json j = envelope("local-vw", S);
  Json in;
  in["phi"] = format(pt);
  in["x"] = format(x);
  in["place"] = format(w);
  in["iters"] = A.iters;
  in["tau_q"] = phi.qtau();
  j["inputs"] = std::move(in);
  j["place"] = format(w);
  j["degree"] = w.degree();
  j["estimate"] = to_string(est);
  j["iterations"] = A.iters;
  j["exact"] = false;
  return j;
}

const char* branch_name(DichotomyBranch b) {
  return b == DichotomyBranch::HeightBound ? "height-bound" : "twist-vanishes";
}

Json cmd_dichotomy(const Session& S, const Args& A) {
  ReducedPoly rf = make_reduced(parse_multi(*S.F, A.f));
  std::vector<RationalFunction> point = parse_point_list(*S.F, A.point);
  if (static_cast<int>(point.size()) != rf.base.nvars())
    throw Error(ErrorKind::Domain,
                "point has " + std::to_string(point.size()) + " coordinates but f has " +
                    std::to_string(rf.base.nvars()) + " variables");
  DichotomyReport rep = dichotomy_check(rf, point, A.audit);
  Json j = envelope("dichotomy", S);
  Json in;
  in["f"] = format(rf.base);
  Json pts = Json::array();
  for (const auto& c : point) pts.push_back(format(c));
  in["point"] = std::move(pts);
  in["audit"] = A.audit;
  j["inputs"] = std::move(in);
  j["reduced_height"] = rf.height;
  j["branch"] = branch_name(rep.branch);
  j["k"] = rep.k;
  j["height"] = to_string(rep.height_of_point);
  j["zeta"] = rep.zeta ? Json(format(*rep.zeta)) : Json(nullptr);
  if (rep.audit) {
    Json a;
    a["zeta_telescoped"] = format(rep.audit->zeta_telescoped);
    a["zeta_quotient"] = rep.audit->zeta_quotient_form
                             ? Json(format(*rep.audit->zeta_quotient_form))
                             : Json(nullptr);
    a["sum_formula_ok"] = rep.audit->sum_formula_ok;
    j["audit"] = std::move(a);
  }
  j["exact"] = true;
  return j;
}

Json certificate_json(const DescentCertificate& cert) {
  Json j;
  j["C"] = to_string(cert.C);
  Json z;
  z["empty"] = cert.Z.empty;
  Json zp = Json::array();
  for (const auto& g : cert.Z.polys) zp.push_back(format(g));
  z["polys"] = std::move(zp);
  j["Z"] = std::move(z);
  Json tr = Json::array();
  for (const auto& s : cert.trace) {
    Json step;
    step["step"] = s.step;
    step["k"] = s.k;
    step["detail"] = s.detail;
    tr.push_back(std::move(step));
  }
  j["trace"] = std::move(tr);
  return j;
}

Json cmd_descend(const Session& S, const Args& A) {
  ReducedPoly rf = make_reduced(parse_multi(*S.F, A.f));
  DescentCertificate cert = descend(rf);
  Json j = envelope("descend", S);
  j["inputs"] = Json{{"f", format(rf.base)}};
  j.update(certificate_json(cert));
  j["exact"] = true;
  return j;
}

Json cmd_verify(const Session& S, const Args& A) {
  ReducedPoly rf = make_reduced(parse_multi(*S.F, A.f));
  DescentCertificate cert = descend(rf);
  if (!A.C.empty()) cert.C = parse_rat_string(A.C);
  if (A.z_empty) cert.Z = ConstantVariety{};
  int dbound = A.degree_given ? A.degree : (rf.base.nvars() == 1 ? 2 : 1);
  VerifyReport rep = verify_certificate(rf, cert, dbound, S.budget);
  Json j = envelope("verify", S);
  Json in;
  in["f"] = format(rf.base);
  in["degree"] = dbound;
  in["C"] = to_string(cert.C);
  in["z_empty"] = cert.Z.empty;
  j["inputs"] = std::move(in);
  j["C"] = to_string(cert.C);
  j["points_checked"] = rep.points_checked;
  j["zeros_found"] = rep.zeros_found;
  j["verified"] = rep.verified;
  if (rep.counterexample) {
    Json cx = Json::array();
    for (const auto& c : *rep.counterexample) cx.push_back(coordinate_json(c));
    j["counterexample"] = std::move(cx);
  }
  j["exact"] = true;
  return j;
}

Json cmd_northcott(const Session& S, const Args& A) {
  Rat B = parse_rat_string(A.bound);
  std::vector<Coordinate> items = northcott_enumerate(*S.F, B, A.degree, S.budget);
  Json j = envelope("northcott", S);
  Json in;
  in["bound"] = to_string(B);
  in["degree"] = A.degree;
  j["inputs"] = std::move(in);
  j["count"] = static_cast<long long>(items.size());
  Json arr = Json::array();
  int shown = 0;
  for (const auto& c : items) {
    if (shown >= A.limit) break;
    arr.push_back(coordinate_json(c));
    ++shown;
  }
  j["items"] = std::move(arr);
  j["truncated"] = static_cast<int>(items.size()) > A.limit;
  j["exact"] = true;
  return j;
}

Json cmd_factor(const Session& S, const Args& A) {
  TPoly f = parse_poly(*S.F, A.f);
  Factorization fz = factor(f);
  Json j = envelope("factor", S);
  j["inputs"] = Json{{"f", format(f)}};
  j["unit"] = S.F->format(fz.unit);
  Json arr = Json::array();
  for (const auto& item : fz.factors) {
    Json one;
    one["poly"] = format(item.prime);
    one["multiplicity"] = item.multiplicity;
    arr.push_back(std::move(one));
  }
  j["factors"] = std::move(arr);
  j["exact"] = true;
  return j;
}

Json cmd_torsion(const Session& S, const Args& A) {
  TwistedPoly pt = parse_twisted(*S.F, A.phi, S.tau_s);
  DrinfeldModule phi = DrinfeldModule::make(pt);
  RationalFunction x = parse_rational(*S.F, A.x);
  TorsionResult tr = torsion_annihilator(phi, x, A.max_steps);
  Json j = envelope("torsion", S);
  Json in;
  in["phi"] = format(pt);
  in["x"] = format(x);
  in["max_steps"] = A.max_steps;
  in["tau_q"] = phi.qtau();
  j["inputs"] = std::move(in);
  j["torsion"] = tr.is_torsion;
  j["annihilator"] =
      tr.annihilator ? Json(format_var(*tr.annihilator, "T")) : Json(nullptr);
  j["height"] = tr.is_torsion ? Json(nullptr) : estimate_json(tr.height);
  j["exact"] = tr.is_torsion ? true : tr.height.exact;
  return j;
}

// ---------------------------------------------------------------------------

CliResult run_impl(const std::vector<std::string>& args, std::istream* batch_input,
                   int depth);

CliResult run_batch(std::istream& in, int depth) {
  CliResult res;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> toks;
    try {
      toks = split_line(line);
    } catch (const Error& e) {
      Json j;
      j["command"] = "batch";
      j["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
      res.out += j.dump() + "\n";
      res.err += std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
      if (res.exit_code == 0) res.exit_code = 2;
      continue;
    }
    CliResult one = run_impl(toks, nullptr, depth + 1);
    res.out += one.out;
    res.err += one.err;
    if (res.exit_code == 0) res.exit_code = one.exit_code;
  }
  return res;
}

CliResult run_impl(const std::vector<std::string>& args, std::istream* batch_input,
                   int depth) {
  CliResult res;
  Args A;

  CLI::App app{"exact heights and Bogomolov certificates over F_q(t)", "ffheight"};
  app.require_subcommand(0, 1);
  app.add_option("--p", A.p, "field characteristic (prime)")->capture_default_str();
  app.add_option("--e", A.e, "extension degree of F_q over F_p (1..4)")
      ->capture_default_str();
  app.add_option("--modulus", A.modulus,
                 "F_q modulus m(u) as comma-separated F_p digits, low to high");
  app.add_option("--budget", A.budget, "enumeration budget (candidate tuples)")
      ->capture_default_str();
  app.add_option("--tau-q", A.tau_q,
                 "q_tau for tau in twisted polynomials (power of p dividing into q); "
                 "default: the session q");
  app.add_flag_callback("--plain", [&A] { A.plain = true; },
                        "plain key = value output");
  app.add_flag_callback("--json", [&A] { A.plain = false; },
                        "JSON output (default)");

  auto add_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  CLI::App* c_height = add_sub("height", "Weil height of a rational element, place by place");
  c_height->add_option("--x", A.x, "element of F_q(t)")->required();

  CLI::App* c_canon =
      add_sub("canonical-height", "canonical height estimate for a Drinfeld module");
  c_canon->add_option("--phi", A.phi, "phi_T as a twisted polynomial in tau")->required();
  c_canon->add_option("--x", A.x, "element of F_q(t)")->required();
  c_canon->add_option("--iters", A.iters, "iteration count n")->capture_default_str();
  c_canon->add_flag("--force-iteration", A.force_iteration,
                    "iterate even for finite-field modules");

  CLI::App* c_local = add_sub("local-vw", "n-th term of the local height series at one place");
  c_local->add_option("--phi", A.phi, "phi_T as a twisted polynomial in tau")->required();
  c_local->add_option("--x", A.x, "element of F_q(t)")->required();
  c_local->add_option("--place", A.place, "'inf' or a monic irreducible of F_q[t]")
      ->required();
  c_local->add_option("--iters", A.iters, "iteration count n")->capture_default_str();

  CLI::App* c_dich = add_sub("dichotomy", "height bound or vanishing Frobenius twist at a zero");
  c_dich->add_option("--f", A.f, "reduced polynomial in X1..Xn over F_q[t]")->required();
  c_dich->add_option("--point", A.point, "comma-separated rational coordinates")->required();
  c_dich->add_flag("--audit", A.audit, "cross-check the twist value three ways");

  CLI::App* c_desc = add_sub("descend", "Bogomolov certificate (C, Z) for a reduced polynomial");
  c_desc->add_option("--f", A.f, "reduced polynomial in X1..Xn over F_q[t]")->required();

  CLI::App* c_verify = add_sub("verify", "exhaustively check a certificate below its bound");
  c_verify->add_option("--f", A.f, "reduced polynomial in X1..Xn over F_q[t]")->required();
  c_verify->add_option("--degree", A.degree, "coordinate degree bound (default 2 for n=1, else 1)");
  c_verify->add_option("--C", A.C, "override the height bound (forgery testing)");
  c_verify->add_flag("--z-empty", A.z_empty, "override Z with the empty variety");

  CLI::App* c_north = add_sub("northcott", "enumerate elements of bounded height and degree");
  c_north->add_option("--bound", A.bound, "height bound B as 'a' or 'a/b'")->required();
  c_north->add_option("--degree", A.degree, "degree bound d (1..3)")->capture_default_str();
  c_north->add_option("--limit", A.limit, "max items listed in the report")
      ->capture_default_str();

  CLI::App* c_factor = add_sub("factor", "factor a polynomial of F_q[t]");
  c_factor->add_option("--f", A.f, "polynomial in t")->required();

  CLI::App* c_tors = add_sub("torsion", "torsion annihilator or positive-height certificate");
  c_tors->add_option("--phi", A.phi, "phi_T as a twisted polynomial in tau")->required();
  c_tors->add_option("--x", A.x, "element of F_q(t)")->required();
  c_tors->add_option("--max-steps", A.max_steps, "iteration cap for the non-torsion path")
      ->capture_default_str();

  CLI::App* c_suite = add_sub("suite", "run the acceptance criteria, one PASS/FAIL line each");
  CLI::App* c_batch = add_sub("batch", "run one command line per stdin line");

  static const std::set<std::string> known = {
      "height", "canonical-height", "local-vw", "dichotomy", "descend",
      "verify", "northcott", "factor", "torsion", "suite", "batch"};
  if (args.empty() || args[0].empty()) {
    res.err = app.help();
    res.exit_code = 64;
    return res;
  }
  if (args[0][0] != '-' && known.count(args[0]) == 0) {
    res.err = "unknown command: " + args[0] + "\n\n" + app.help();
    res.exit_code = 64;
    return res;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto got = app.get_subcommands();
    res.out = got.empty() ? app.help() : got.front()->help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("argument error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  }
  A.degree_given = c_verify->count("--degree") > 0;

  auto parsed_subs = app.get_subcommands();
  if (parsed_subs.empty()) {
    res.err = app.help();
    res.exit_code = 64;
    return res;
  }
  std::string command = parsed_subs.front()->get_name();

  auto t0 = std::chrono::steady_clock::now();
  try {
    Session S;
    S.F = std::make_unique<FqCtx>(
        FieldConfig::make(A.p, A.e, A.modulus.empty() ? std::vector<int>{}
                                                      : parse_modulus_flag(A.modulus)));
    S.tau_s = tau_s_from_q(*S.F, A.tau_q);
    if (A.budget <= 0) throw Error(ErrorKind::Domain, "--budget must be positive");
    S.budget = A.budget;
    S.plain = A.plain;

    if (c_suite->parsed()) {
      std::ostringstream oss;
      int failures = run_acceptance_suite(oss);
      res.out = oss.str();
      res.exit_code = failures == 0 ? 0 : 1;
      return res;
    }
    if (c_batch->parsed()) {
      if (depth > 0) throw Error(ErrorKind::Domain, "batch lines cannot invoke batch");
      return run_batch(batch_input ? *batch_input : std::cin, depth);
    }

    Json report;
    if (c_height->parsed()) report = cmd_height(S, A);
    else if (c_canon->parsed()) report = cmd_canonical_height(S, A);
    else if (c_local->parsed()) report = cmd_local_vw(S, A);
    else if (c_dich->parsed()) report = cmd_dichotomy(S, A);
    else if (c_desc->parsed()) report = cmd_descend(S, A);
    else if (c_verify->parsed()) report = cmd_verify(S, A);
    else if (c_north->parsed()) report = cmd_northcott(S, A);
    else if (c_factor->parsed()) report = cmd_factor(S, A);
    else if (c_tors->parsed()) report = cmd_torsion(S, A);

    res.out = S.plain ? plain_render(report) : report.dump() + "\n";
  } catch (const Error& e) {
    Json j;
    j["command"] = command;
    j["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    res.out = A.plain ? std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n"
                      : j.dump() + "\n";
    res.err = std::string("error (") + to_string(e.kind()) + "): " + e.what() + "\n";
    res.exit_code = e.kind() == ErrorKind::Budget ? 3 : 2;
  } catch (const std::exception& e) {
    res.err = std::string("internal error: ") + e.what() + "\n";
    res.exit_code = 2;
  }
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "# %s: %.3f ms\n", command.c_str(), ms);
  res.err += buf;
  return res;
}

}  // namespace

CliResult cli_run(const std::vector<std::string>& args, std::istream* batch_input) {
  return run_impl(args, batch_input, 0);
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  CliResult res = cli_run(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}

}  // namespace ffheight
