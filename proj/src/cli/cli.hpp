#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wsnu::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNoBoundState = 2,
  kSolverFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsnu::cli
