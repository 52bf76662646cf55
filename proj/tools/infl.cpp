#include <iostream>
#include <string>
#include <vector>

#include "infl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return infl::run_cli(args, std::cout, std::cerr);
}
