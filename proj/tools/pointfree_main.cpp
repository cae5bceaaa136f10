#include <iostream>
#include <string>
#include <vector>

#include "pointfree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pointfree::cli::run(args, std::cout, std::cerr);
}
