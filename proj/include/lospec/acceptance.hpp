#pragma once

#include <string>
#include <vector>

namespace lospec::acceptance {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

struct Options {
  int max_k = 4;         // spectra fully verified for k = 0..max_k (>= 4 required for full coverage)
  int positivity_k = 6;  // exact positivity checked for k = 5..positivity_k
  bool use_cache = false;
};

// Runs the full verification battery and returns one result per criterion.
std::vector<CriterionResult> run_all(const Options& opts);

// true iff every criterion passed
bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace lospec::acceptance
