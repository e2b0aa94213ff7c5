#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayley::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// The check names accepted by `verify --checks`, in report order.
const std::vector<std::string>& all_check_names();

/// Runs the command line (args excludes the program name). Results go to
/// out, diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cayley::cli
