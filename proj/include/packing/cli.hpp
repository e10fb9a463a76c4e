#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packing::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kInvalidInput = 1, kNotApplicable = 2, kBudgetExhausted = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packing::cli
