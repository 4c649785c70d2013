#include <iostream>

#include "slid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slid::cli::run(args, std::cout, std::cerr);
}
