#pragma once

#include <string>
#include <vector>

namespace cuspcount {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds
};

inline constexpr int kCriterionCount = 10;

// Runs one criterion; exceptions are caught and reported as failures.
// Exceeding the time budget also counts as a failure.
CriterionResult run_criterion(int id);

// "all", "tables" (criteria 3 and 7) or "identities" (the rest).
std::vector<int> criteria_for_suite(const std::string& suite);

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids);

// "PASS [3] title (0.41 s / 60 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace cuspcount
