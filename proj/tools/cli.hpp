#pragma once

#include <iosfwd>

namespace propalg::cli {

/// Exit codes of the propalg tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceGuard = 3,
};

/// Runs the command line `argv` writing results to `out` and diagnostics
/// to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace propalg::cli
