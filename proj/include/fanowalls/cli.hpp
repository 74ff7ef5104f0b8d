#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fanowalls::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Runs one command line (args[0] is the program name). Data goes to out,
/// diagnostics to err. Reads FANOWALLS_BOUND_SCALE from the environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanowalls::cli
