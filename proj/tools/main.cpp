#include <iostream>
#include <string>
#include <vector>

#include "etaforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return etaforge::run_cli(args, std::cout, std::cerr);
}
