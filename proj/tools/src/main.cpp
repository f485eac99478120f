#include <iostream>

#include "rrfair/cli.hpp"

int main(int argc, char** argv) {
  return rrfair::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
