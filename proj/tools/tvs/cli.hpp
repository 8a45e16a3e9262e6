#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tvs::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,         // numerical failure or reference mismatch
  kInputError = 2,      // unreadable or inconsistent input, bad flags
  kTheoryViolation = 3  // plan is not qualified for the support
};

/// Runs the tool on `args` (without the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvs::cli
