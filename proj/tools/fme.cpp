#include <iostream>

#include "fme/cli.hpp"

int main(int argc, char** argv) {
  return fme::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
