#include <iostream>

#include "cmub_eur/commands.hpp"

int main(int argc, char** argv) {
  return cmub::cli::run_cli(argc, argv, std::cout, std::cerr);
}
