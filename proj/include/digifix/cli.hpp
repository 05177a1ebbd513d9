#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digifix {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitBudget = 3,
  kExitVerifyFailed = 4,
};

/// Environment variable holding the default search node budget.
inline constexpr const char* kBudgetEnv = "DIGIFIX_NODE_BUDGET";

/// Runs one command line (without the program name). Reports go to `out`
/// unless -o names a file; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digifix
