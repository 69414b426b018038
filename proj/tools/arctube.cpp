#include <iostream>
#include <string>
#include <vector>

#include "arctube/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arctube::cli::run(std::move(args), std::cout, std::cerr);
}
