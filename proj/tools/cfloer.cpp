#include <cstdlib>
#include <iostream>

#include "cfloer/cli/commands.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return cfloer::cli::run(argc, argv, std::cout, std::cerr, std::getenv("CF_TOL"));
}
