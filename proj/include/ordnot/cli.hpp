#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordnot::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kParse = 2, kBudget = 3 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordnot::cli
