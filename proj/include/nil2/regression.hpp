#pragma once

#include <string>
#include <vector>

namespace nil2 {

struct RegressionCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Worked-example suite behind `nil2 corpus`: structural values, dominion
/// examples, closure and amalgamation-base verdicts, certificate checks.
/// Sorted by name; checks run in parallel when OpenMP is available.
std::vector<RegressionCheck> run_regression_corpus();

}  // namespace nil2
