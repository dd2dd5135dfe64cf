#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace refclass::cli {

// Exit codes shared by all commands.
enum ExitCode : int {
  ok = 0,
  parse_failure = 1,
  inconsistent = 2,
  undefined_result = 3,
  no_model = 4,
};

struct Options {
  bool color = false;  // ANSI styling of human-readable output
};

// Runs `refclass <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options = {});

}  // namespace refclass::cli
