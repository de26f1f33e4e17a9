#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permsq::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // counterexample or reference mismatch
  kUsage = 2,    // usage, parse, or precondition error
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permsq::cli
