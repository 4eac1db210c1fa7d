#pragma once

#include <stdexcept>
#include <string>

namespace ffheight {

// Error taxonomy. The CLI maps kinds to exit codes: Budget -> 3, everything
// else -> 2 (success is 0, unknown command/usage is 64).
enum class ErrorKind {
  Domain,          // bad value for an operation (zero denominator, p not prime, ...)
  Precondition,    // documented precondition violated (f(x) != 0, p | d, ...)
  Parse,           // grammar error, carries a position
  Budget,          // enumeration/iteration budget exhausted
  Claim,           // exact-divisibility claim failed where theory demands it
  Irreducibility,  // irreducibility witness contradicts a divisibility result
  Inconclusive,    // algorithm cannot decide with the implemented machinery
  Unsupported      // outside desk scale (q too big, degree bound too big, ...)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t pos, const std::string& msg)
      : Error(ErrorKind::Parse, msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Claim: return "claim";
    case ErrorKind::Irreducibility: return "irreducibility";
    case ErrorKind::Inconclusive: return "inconclusive";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

}  // namespace ffheight
