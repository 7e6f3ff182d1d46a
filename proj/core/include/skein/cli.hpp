#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skein::cli {

enum ExitCode { kOk = 0, kInputError = 1, kBudgetExhausted = 2 };

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein::cli
