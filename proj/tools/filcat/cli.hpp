#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace filcat::cli {

enum ExitCode : int { exit_ok = 0, exit_law_failure = 1, exit_input_error = 2, exit_size_cap = 3 };

/// Runs one invocation. `args` excludes the program name; `in` backs `-i -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace filcat::cli
