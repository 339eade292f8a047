#ifndef LINEMETRIC_TOOLS_CLI_HPP
#define LINEMETRIC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace linemetric::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitNotAnEdge = 3;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linemetric::cli

#endif  // LINEMETRIC_TOOLS_CLI_HPP
