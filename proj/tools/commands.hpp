#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace witt::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command line (args excludes the program name). When
/// `out_is_terminal` is false and no --format is given, reports use the
/// structured format.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_terminal = false);

}  // namespace witt::cli
