#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isobound::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kBoundViolation = 1,
  kInputError = 2,
  kSolverFailure = 3,
};

/// Runs the command line `args` (without the program name). Artifacts go to
/// `out` unless --out names a file; diagnostics and PASS/FAIL lines go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isobound::cli
