#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satforge::cli {

enum ExitCode : int { kOk = 0, kVerdictFailure = 1, kUsageError = 2, kBudgetExhausted = 3 };

/// Runs one command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satforge::cli
