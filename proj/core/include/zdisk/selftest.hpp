#pragma once

#include <string>
#include <vector>

namespace zdisk {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestOptions {
  unsigned threads = 0;  // oracle enumeration threads; 0 = hardware concurrency
};

// Runs the full verification suite (classification golden table, oracle
// cross-checks, ideal identities, knot table, number-theory spot checks,
// randomized property suites) and reports one result per criterion.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

// The bundled five-crossing knot table (same content as data/knots_5crossings.csv).
extern const char* const kFiveCrossingCsv;

}  // namespace zdisk
