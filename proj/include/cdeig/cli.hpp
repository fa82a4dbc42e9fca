#pragma once

#include <iosfwd>

namespace cdeig::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;  // bad flags, parse errors, unknown names
inline constexpr int kExitZeroElement = 3;
inline constexpr int kExitNoSolution = 4;

/// Runs the command line given in argv.  Machine output goes to out,
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdeig::cli
