#pragma once

#include <iosfwd>

namespace dcn::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

/// Runs the tool with the given arguments (argv[0] is the program name).
/// Results go to `out` unless an --output file is given; diagnostics go to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace dcn::cli
