#include <iostream>
#include <string>
#include <vector>

#include "qnull/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qnull::run_cli(args, std::cout, std::cerr);
}
