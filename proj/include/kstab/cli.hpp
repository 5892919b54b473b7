#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kstab::cli {

/// Exit codes of the `kstab` tool.
enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2 };

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Path of the catalog shipped with the sources.
std::string default_catalog_path();

}  // namespace kstab::cli
