#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subsetconv::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFormat = 2,
  kInfeasible = 3,
  kGuard = 4,
};

// args excludes the program name. Results go to out only when the command
// succeeds; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subsetconv::cli
