#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracspec::cli {

/// Exit codes of the fracspec tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the tool on `args` (program name excluded). Data goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracspec::cli
