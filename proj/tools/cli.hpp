#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coingame::cli {

enum ExitCode : int {
        kSuccess = 0,
        kCheckFailure = 1,
        kUsageError = 2,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Minimal RFC 4180 helpers shared with the tests.
std::string csv_escape(const std::string& cell);
std::vector<std::string> csv_split(const std::string& line);

} // namespace coingame::cli
