#pragma once

#include <iosfwd>

namespace conjlab {

/// Exit codes of the conjlab tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitConsistency = 4,
};

/// Parses argv and runs one subcommand, writing results to out (unless
/// --output names a file) and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conjlab
