#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specjump::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specjump::cli
