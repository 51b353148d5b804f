#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evolalg::cli {

enum ExitCode : int { kOk = 0, kUserError = 1, kInternalError = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evolalg::cli
