#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodal {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 1, kExitNotTypeA = 2, kExitLimit = 3 };

/// Runs the nodalq command line with `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodal
