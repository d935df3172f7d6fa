#include <iostream>
#include <string>
#include <vector>

#include "polyomino/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyomino::cli::run(args, std::cout, std::cerr);
}
