#include <iostream>
#include <string>
#include <vector>

#include "ultralat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ultralat::run_cli(args, std::cout, std::cerr);
}
