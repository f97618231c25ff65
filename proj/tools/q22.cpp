#include <iostream>

#include "q22/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return q22::cli::run_cli(args, std::cout, std::cerr);
}
