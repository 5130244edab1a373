#include <iostream>
#include <vector>

#include "catext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return catext::cli_run(args, std::cout, std::cerr);
}
