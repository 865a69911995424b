#include <iostream>
#include <string>
#include <vector>

#include "ordnot/cli.hpp"

int main(int argc, char** argv) {
  return ordnot::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
