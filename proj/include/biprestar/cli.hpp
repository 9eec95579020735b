#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biprestar::cli {

// Stable exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,       // bad flags or out-of-range parameters
  kDegenerate = 2,  // t at the excluded point of the |a2| bound
  kViolation = 3,   // verification found a bound violation
};

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace biprestar::cli
