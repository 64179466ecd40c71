#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wldu {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  /// A bound, criterion or identity check failed.
  kExitViolation = 1,
  kExitUsage = 2,
};

/// Runs one `wldu` invocation. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wldu
