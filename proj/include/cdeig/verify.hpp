#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdeig/element.hpp"

namespace cdeig {

struct CheckResult {
  std::string id;
  int instances = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool pass() const;
};

/// Known suites: core-identities, eigentheory, pair-predictions, a4,
/// spec-top, all.  Each check reruns a statement across seeded random
/// instances and records the worst residual; throws std::invalid_argument for
/// an unknown suite name.
VerificationReport run_suite(const std::string& suite, uint64_t seed, int trials);

const std::vector<std::string>& suite_names();

}  // namespace cdeig
