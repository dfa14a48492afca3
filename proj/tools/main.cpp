#include <iostream>

#include "mixeddet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mixeddet::cli::run(args, std::cout, std::cerr);
}
