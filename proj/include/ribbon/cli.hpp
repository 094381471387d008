#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbon::cli {

/// Exit codes of run().
enum ExitCode : int {
  ok = 0,
  usage_error = 2,
  parse_error = 3,
  precondition_error = 4,
  verification_error = 5,
};

/// Execute one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbon::cli
