#include <iostream>
#include <string>
#include <vector>

#include "verbprof/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return verbprof::cli::run(args, std::cout, std::cerr);
}
