#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrfair {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,        // success / feasible
  exit_negative = 1,  // infeasible schedule, inconsistent data, no solution
  exit_usage = 2,     // bad flags, unparsable input, invalid n
  exit_unknown = 3,   // solver budget exhausted
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrfair
