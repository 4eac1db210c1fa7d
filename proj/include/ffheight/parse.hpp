#pragma once

#include <string>
#include <variant>

#include "ffheight/drinfeld.hpp"
#include "ffheight/multipoly.hpp"

namespace ffheight {

using ParsedElement = std::variant<RationalFunction, TwistedPoly, MultiPoly>;

// Parses the shared element grammar: integer literals, `u` (generator of F_q
// when e >= 2), `t`, `tau`, variables `X1..Xn`, operators + - * ^ and
// parentheses; whitespace is insignificant. The domain is inferred from the
// symbols present: `tau` makes a twisted polynomial (with twist exponent
// tau_s, so tau c = c^{p^tau_s} tau), an `Xk` makes a multivariate polynomial
// with the variable count inferred from the largest index, anything else is a
// rational function. Division is the only context-restricted operator: free
// in a rational-function source, but inside tau- or X-polynomials it must sit
// within parentheses (rational coefficients like `(1/t)*tau`). Mixing tau
// with X variables is rejected. All failures raise ParseError with the
// offending position.
ParsedElement parse_element(const FqCtx& F, const std::string& src, int tau_s);

// Entry points that additionally pin the expected domain.
RationalFunction parse_rational(const FqCtx& F, const std::string& src);
TPoly parse_poly(const FqCtx& F, const std::string& src);  // denominator must be 1
TwistedPoly parse_twisted(const FqCtx& F, const std::string& src, int tau_s);
MultiPoly parse_multi(const FqCtx& F, const std::string& src);

}  // namespace ffheight
