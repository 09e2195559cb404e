#include <iostream>

#include "curvecount/cli.hpp"

int main(int argc, char** argv) {
  return curvecount::run_cli(argc, argv, std::cout, std::cerr);
}
