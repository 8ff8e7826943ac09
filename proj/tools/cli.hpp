#pragma once

#include <string>
#include <vector>

namespace l12::cli {

// Entry point behind the l12glasso binary. args excludes the program name,
// e.g. {"simulate", "--n", "120", ...}. Returns the process exit code:
// 0 success, 1 usage/input error, 2 solver failure.
int run_command(const std::vector<std::string>& args);

}  // namespace l12::cli
