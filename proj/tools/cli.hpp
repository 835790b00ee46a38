#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riglab::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing data to
/// `out` and human-readable messages to `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Splices flags from a `--config FILE` (flat key=value lines) into `args`
/// after the subcommand; flags already present on the command line win.
std::vector<std::string> apply_config(std::vector<std::string> args);

}  // namespace riglab::cli
