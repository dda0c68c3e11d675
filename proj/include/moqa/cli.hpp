#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moqa::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,          ///< success, pass, or member
    kInputError = 1,  ///< usage, parse, or spec error
    kResource = 2,    ///< a size budget was exceeded
    kNegative = 3,    ///< non-member or failed verification
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` as `key: value` lines, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moqa::cli
