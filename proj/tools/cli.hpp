#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConstruction = 3;

inline constexpr const char* kVersion = "1.0.0";

/// Runs the `schurlab` command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurlab::cli
