#include <iostream>
#include <string>
#include <vector>

#include "trel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return trel::cli::run(args, std::cin, std::cout, std::cerr, trel::cli::process_environment());
}
