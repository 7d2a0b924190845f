#include <iostream>
#include <string>
#include <vector>

#include "zdk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zdk::run_cli(args, std::cout, std::cerr);
}
