#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radicsum::cli {

enum ExitCode : int {
  kSuccess = 0,
  kClaimFailure = 1,
  kUsage = 2,
  kOverflow = 3,
  kNonConvergence = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace radicsum::cli
