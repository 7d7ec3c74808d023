#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbc {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitDegenerate = 2;
inline constexpr int kExitParseError = 3;

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbc
