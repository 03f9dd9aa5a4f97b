#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxtoll {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostic = 1;  // inconsistent solution, parse or model error
inline constexpr int kExitUsage = 2;

// Runs the tool on `args` (without the program name), writing reports to
// `out` and diagnostics to `err`. Returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxtoll
