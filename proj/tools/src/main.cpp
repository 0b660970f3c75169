#include <iostream>

#include "agorum_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return agorum::cli::run(args, std::cout, std::cerr);
}
