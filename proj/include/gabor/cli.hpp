#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gabor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (args[0] is the program name). Artifacts go
/// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gabor::cli
