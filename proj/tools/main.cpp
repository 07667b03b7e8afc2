#include <iostream>

#include "smooth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smooth::run_cli(args, std::cout, std::cerr);
}
