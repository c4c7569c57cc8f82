#pragma once

#include "rmss/limits.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rmss {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// axioms | ports | entropy | all
  std::string suite = "all";
  unsigned trials = 10;
  std::uint64_t seed = 0;
  /// Test hook: adds a check on a rank table with one corrupted entry.
  bool corrupt_rank = false;
  Limits limits;
};

/// Runs the built-in fixture goldens and randomized property suites.
/// Results are in a fixed order determined by the options alone.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

}  // namespace rmss
