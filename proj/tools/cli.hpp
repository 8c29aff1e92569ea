#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normalcx::cli {

inline constexpr int kExitNormal = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitSpunNormal = 2;
inline constexpr int kExitNotNormal = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInvalidTriangulation = 65;
inline constexpr int kExitUnreadable = 66;

/// Runs one subcommand; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace normalcx::cli
