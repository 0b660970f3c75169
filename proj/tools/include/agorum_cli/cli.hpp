#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agorum::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitBudget = 4;

// Runs one command line (args[0] is the program name). The JSON report, or
// an error document, goes to `out`; human-readable diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agorum::cli
