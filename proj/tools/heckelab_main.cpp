#include <iostream>

#include "heckelab/cli.hpp"

int main(int argc, char** argv) {
  return heckelab::run_cli(argc, argv, std::cout, std::cerr);
}
