#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultralat {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitInvalid = 3,
  kExitCapExceeded = 4,
  kExitInternal = 5,
};

/// Runs one CLI invocation. args excludes the program name. Reports go to out (or to the
/// --out file), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultralat
