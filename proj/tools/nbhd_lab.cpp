#include <iostream>
#include <string>
#include <vector>

#include "nbhd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nbhd::run_command(args, std::cout, std::cerr);
}
