#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrmgray {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs the command line `args` (without the program name). A file argument
/// of "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lrmgray
