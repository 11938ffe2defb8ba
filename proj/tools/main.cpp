#include <iostream>
#include <vector>

#include "semihyp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semihyp::cli::run(args, std::cout, std::cerr);
}
