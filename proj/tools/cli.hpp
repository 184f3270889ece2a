#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdzeros::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kInvalidInput = 2,
  kNonConvergence = 3,
};

/// Runs one invocation. `args` excludes the program name; "-" as a file argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fdzeros::cli
