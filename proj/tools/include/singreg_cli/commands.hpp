#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singreg::cli {

// Exit codes.
inline constexpr int kFeasible = 0;
inline constexpr int kInfeasible = 1;
inline constexpr int kFlagged = 2;
inline constexpr int kUsage = 64;
inline constexpr int kIoError = 74;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singreg::cli
