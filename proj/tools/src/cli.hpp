#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mlrelax::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlrelax::cli
