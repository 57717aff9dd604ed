#pragma once

#include <string>
#include <vector>

namespace qf::cli {

/// Exit codes: 0 success, 1 Distinguished (equivalence commands), 2 input
/// error, 3 internal invariant violation.
struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// Runs one CLI command. args excludes the program name; stdin_text stands
/// in for standard input ("--form -" reads the form document from it).
RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "");

}  // namespace qf::cli
