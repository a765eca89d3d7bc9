#include <iostream>

#include "hiersep/cli/cli.hpp"

int main(int argc, char** argv) {
  return hiersep::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
