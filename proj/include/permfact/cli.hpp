#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permfact {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace permfact
