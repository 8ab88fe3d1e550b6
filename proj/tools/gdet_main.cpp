#include <iostream>

#include "gdet/cli.hpp"

int main(int argc, char** argv) {
  return gdet::cli::main_entry(argc, argv, std::cout, std::cerr);
}
