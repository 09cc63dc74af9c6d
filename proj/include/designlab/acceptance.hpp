#pragma once

#include <string>
#include <vector>

#include "designlab/cli.hpp"

namespace designlab::selftest {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the ten acceptance criteria. `quick` shrinks trial counts and
/// enumeration bounds; `full` uses the bounds and tolerances the criteria
/// state.
std::vector<CriterionResult> run_acceptance(cli::SelftestLevel level);

/// "[PASS] 3  Exhaustive generalized Fisher: ... (1.23 s)"
std::string format_line(const CriterionResult& r);

}  // namespace designlab::selftest
