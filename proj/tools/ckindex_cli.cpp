#include <ckindex/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  const ckindex::CommandResult r = ckindex::run_command({argv + 1, argv + argc});
  std::cout << r.output;
  return r.exit_code;
}
