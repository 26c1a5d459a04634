#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exckit::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_math_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one CLI invocation in-process. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`; the return value is the
/// process exit code (0 pass, 1 mathematical failure, 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exckit::cli
