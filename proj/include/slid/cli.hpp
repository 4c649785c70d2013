#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slid::cli {

/// Exit statuses of the slid tool.
enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,
  kUsageError = 2,   // bad arguments or rule spec
  kNotProven = 3,    // check did not prove and --expect proven was given
  kMismatch = 4,     // engines or stored terms disagree
};

/// Runs the tool on argv[1..] and returns the exit status. All output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slid::cli
