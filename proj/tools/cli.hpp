#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permtest::cli {

/// Exit statuses of the permtest tool.
enum ExitCode : int { kOk = 0, kReject = 1, kUsage = 2, kInfeasible = 3 };

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permtest::cli
