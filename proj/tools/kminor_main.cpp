#include <iostream>
#include <string>
#include <vector>

#include "kminor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kminor::cli_main(args, std::cout, std::cerr);
}
