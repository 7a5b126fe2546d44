#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopf::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUndecided = 2, kInputError = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
