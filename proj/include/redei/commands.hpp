#pragma once

#include <ostream>

namespace redei {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitVerificationFailed = 3,
    kExitFamilyPrecondition = 4,
};

/// Parses argv and runs one subcommand (structure, classes, pairs, isolated,
/// family, verify), writing results to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace redei
