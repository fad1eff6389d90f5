#include <iostream>

#include "lga/cli.hpp"

int main(int argc, char** argv) {
  return lga::run_cli(argc, argv, std::cout, std::cerr);
}
