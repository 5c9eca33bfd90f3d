#include <iostream>

#include "wshift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wshift::run_cli(args, std::cout, std::cerr);
}
