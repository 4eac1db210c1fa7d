#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffheight {

// One acceptance criterion: a self-contained check carrying its own oracle
// data, run in a fresh session.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts checked / first failure, one line
  double seconds = 0.0;
};

// Runs all criteria in order (never throws; an escaped exception fails the
// criterion that raised it).
std::vector<CriterionResult> run_acceptance();

// Prints one PASS/FAIL line per criterion plus a summary line; returns the
// number of failures so callers can exit nonzero on any red.
int run_acceptance_suite(std::ostream& os);

}  // namespace ffheight
