#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "bhnlab_cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return bhnlab::cli::run(std::move(args), {std::cin, std::cout, std::cerr},
                          std::getenv("BHNLAB_JOBS"));
}
