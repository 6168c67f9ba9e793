#pragma once

#include <iosfwd>

namespace tt {

/// Exit codes of the `tt` tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitTypeError = 1,
    kExitParseError = 2, // also unreadable files and bad usage
    kExitMismatch = 3,   // not equal, oracle disagreement, fuzz failure
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tt
