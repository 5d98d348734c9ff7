#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relpol::cli {

enum ExitCode : int {
  kOk = 0,
  kArgumentError = 2,
  kSupercritical = 3,
  kConvergenceFailure = 4,
};

/// Runs the command line (args excludes the program name). Documents go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relpol::cli
