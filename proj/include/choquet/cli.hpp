#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace choquet::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless redirected with -o, diagnostics to `err`; instances are read
/// from `in` when no path is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace choquet::cli
