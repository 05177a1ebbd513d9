#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "digifix/spectrum.hpp"

namespace digifix {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> failures;  // one line per failed check
  std::string summary;                // what was checked, on success
  std::chrono::duration<double> elapsed{0};
};

struct AcceptanceOptions {
  unsigned threads = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::set<int> only;  // empty: every criterion
};

inline constexpr int kCriterionCount = 12;

/// Runs the acceptance criteria in order; `on_done` sees each result as soon
/// as it is available.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});

/// "PASS  3  title  (1.23 s)" followed by indented failure lines.
std::string format_criterion(const CriterionResult& r);

}  // namespace digifix
