#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifol::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // a semantic check failed, or two terms are not equivalent
  kUsage = 2,        // bad arguments, unreadable input, parse or arity errors
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifol::cli
