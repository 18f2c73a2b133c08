#include <iostream>
#include <string>
#include <vector>

#include "vsecon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vsecon::run_cli(args, std::cout, std::cerr);
}
