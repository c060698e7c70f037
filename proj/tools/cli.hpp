#pragma once

// Command dispatch for the `chd` tool.

#include <iosfwd>
#include <string>
#include <vector>

namespace chd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFail = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Reports go to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chd::cli
