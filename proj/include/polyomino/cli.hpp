#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace polyomino::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name. Every flag can
// also come from an environment variable POLYOMINO_<FLAG> (e.g.
// POLYOMINO_COUNTS, POLYOMINO_N0); the command line wins.
//
// Exit codes: 0 success, 1 a data check came out the other way from the
// published run, 2 usage or input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polyomino::cli
