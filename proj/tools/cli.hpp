#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triangle_words::cli {

/// Process exit codes.
enum ExitCode : int {
  kPositive = 0,  // universal / true / solvable, or a plain successful report
  kNegative = 1,  // not universal / false / unsolvable
  kInputError = 2,
  kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triangle_words::cli
