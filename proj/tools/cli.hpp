#pragma once

#include <iosfwd>

namespace co31::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,         // bad arguments or unreadable input
    kVerifyFailed = 2,
    kRejected = 3,      // input outside the algorithm's domain
};

/// Runs one command line. Regular output goes to `out`, diagnostics to `err`;
/// `-` as an input path reads standard input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace co31::cli
