#include <iostream>

#include "lefschetz/cli.hpp"

int main(int argc, char **argv) {
  return lefschetz::run_cli(argc, argv, std::cout, std::cerr);
}
