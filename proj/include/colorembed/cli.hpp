#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colorembed {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitUsage = 2 };

/// Runs the command-line tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colorembed
