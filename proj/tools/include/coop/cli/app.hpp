#pragma once

#include <string>
#include <vector>

namespace coop::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// Counterexample, NotInFamily, a failed corpus fact or a failed crosscheck.
  kRefuted = 1,
  kUsageError = 2,
  /// The exhaustive search hit its instance cap without a counterexample.
  kBudgetExhausted = 3,
};

struct Result {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one command. `args` excludes the program name.
Result execute(const std::vector<std::string>& args);

}  // namespace coop::cli
