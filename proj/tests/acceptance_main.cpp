#include <iostream>

#include "designlab/acceptance.hpp"

// Runs every criterion at full size; ctest fails if any line says FAIL.
int main() {
  int failed = 0;
  for (const auto& r : designlab::selftest::run_acceptance(designlab::cli::SelftestLevel::full)) {
    std::cout << designlab::selftest::format_line(r) << '\n';
    failed += !r.passed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
