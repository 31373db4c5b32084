#include <iostream>

#include "multiform/cli.hpp"

int main(int argc, char** argv) {
  return multiform::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
