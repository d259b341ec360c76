#include <iostream>

#include "zdext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zdext::run_cli(args, std::cout, std::cerr);
}
