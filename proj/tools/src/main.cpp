#include "lrn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return lrn::cli::main_entry(argc, argv, std::cout, std::cerr);
}
