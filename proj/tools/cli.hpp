#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypertutte::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 success, 1 verification failure or strict counterexample, 2 usage or
// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypertutte::cli
