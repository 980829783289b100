#include <iostream>
#include <string>
#include <vector>

#include "gabor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gabor::cli::run(args, std::cout, std::cerr);
}
