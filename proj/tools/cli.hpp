#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixvol::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixvol::cli
