#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace morphud::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Runs `morphud <args...>` (args exclude the program name). Data goes to
/// `out` when an output path is "-", reports and diagnostics follow the
/// rule: `out` when it carries no data, `err` otherwise.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace morphud::cli
