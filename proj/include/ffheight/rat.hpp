#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "ffheight/errors.hpp"

namespace ffheight {

// Exact rational numbers. Heights, valuations and error bounds at desk scale
// stay far below 2^63, so a machine-word rational is enough.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Largest integer n with n <= r.
inline long long rat_floor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long rat_ceil(const Rat& r) { return -rat_floor(-r); }

// q^n for small exponents, with an overflow guard (desk scale only).
inline long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (1LL << 62) / (base < 0 ? -base : base))
      throw Error(ErrorKind::Unsupported, "integer power overflow at desk scale");
    r *= base;
  }
  return r;
}

}  // namespace ffheight
