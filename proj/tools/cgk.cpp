#include <iostream>
#include <string>
#include <vector>

#include "cgk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cgk::cli::run(std::move(args), std::cout, std::cerr);
}
