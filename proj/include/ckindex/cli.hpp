#pragma once

#include <string>
#include <vector>

namespace ckindex {

struct CommandResult {
  int exit_code = 0;  // 0 ok, 2 precondition or input error, 1 internal failure
  std::string output;
};

/// Runs one CLI invocation; `args` excludes the program name. Never throws.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace ckindex
