#include <iostream>

#include "hitchlat/cli.hpp"

int main(int argc, char** argv) {
  return hitchlat::run_cli(argc, argv, std::cout, std::cerr);
}
