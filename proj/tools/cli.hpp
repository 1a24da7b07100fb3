#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treelasso::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int {
  kSuccess = 0,
  kInputError = 1,
  kIncomplete = 2,
  kInconsistent = 3,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treelasso::cli
