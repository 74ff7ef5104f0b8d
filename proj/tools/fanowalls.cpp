#include <iostream>
#include <string>
#include <vector>

#include "fanowalls/cli.hpp"

int main(int argc, char** argv) {
  return fanowalls::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
