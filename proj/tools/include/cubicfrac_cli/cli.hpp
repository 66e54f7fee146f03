#pragma once

#include <ostream>

namespace cubicfrac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Parses argv, runs the selected subcommand and writes one output record to
// `out` (or to the --out file). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cubicfrac::cli
