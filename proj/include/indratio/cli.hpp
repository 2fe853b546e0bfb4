#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace indratio::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // precondition violation, invalid input, failed check
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace indratio::cli
