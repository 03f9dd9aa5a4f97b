#include <iostream>
#include <string>
#include <vector>

#include "maxtoll/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return maxtoll::run_cli(args, std::cout, std::cerr);
}
