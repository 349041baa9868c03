#include <iostream>

#include "conevol/commands.hpp"

int main(int argc, char** argv) {
  return conevol::cli::run_cli(argc, argv, std::cout, std::cerr);
}
