#include <iostream>
#include <string>
#include <vector>

#include "kuga/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kuga::cli::run(args, std::cout, std::cerr);
}
