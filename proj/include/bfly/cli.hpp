#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfly {

/// Exit codes: 0 everything verified, 1 counterexample / mismatch / degenerate
/// instance, 2 usage, parse or type error.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

/// The `bfly` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bfly
