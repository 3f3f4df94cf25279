#include <iostream>
#include <string>
#include <vector>

#include "primrt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return primrt::run_cli(args, std::cout, std::cerr);
}
