#include <iostream>
#include <string>
#include <vector>

#include "covtype/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return covtype::cli::run(args, std::cin, std::cout, std::cerr);
}
