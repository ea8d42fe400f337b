#include "siegert/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return siegert::run_cli(argc, argv, std::cout, std::cerr);
}
