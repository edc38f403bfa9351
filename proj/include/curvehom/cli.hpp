#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvehom {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command (without the program name) and returns its exit code.
/// Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvehom
