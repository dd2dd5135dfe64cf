#include "refclass/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  refclass::cli::Options options;
  options.color = std::getenv("REFCLASS_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return refclass::cli::run(args, std::cout, std::cerr, options);
}
