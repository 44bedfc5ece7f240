#include <iostream>
#include <string>
#include <vector>

#include "latdense/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latdense::run(args, std::cout, std::cerr);
}
