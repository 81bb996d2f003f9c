#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prefdom {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Runs the command line `args` (program name excluded) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prefdom
