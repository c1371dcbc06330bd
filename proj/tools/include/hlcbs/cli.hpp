#pragma once

#include <iosfwd>

namespace hlcbs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerification = 2;

// Parses argv (argv[0] is the program name) and runs one subcommand.
// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hlcbs::cli
