#include <iostream>
#include <string>
#include <vector>

#include "varpat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return varpat::run_cli(args, std::cout, std::cerr);
}
