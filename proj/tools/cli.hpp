#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pica::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  ///< reject, counterexample found, violations
inline constexpr int kUsage = 2;     ///< bad flags or unreadable input

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pica::cli
