#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sodforge {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// "-" as an input path reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sodforge
