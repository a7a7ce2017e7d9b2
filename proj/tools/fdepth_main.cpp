#include <iostream>
#include <string>
#include <vector>

#include "fdepth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fdepth::run_cli(args, std::cout, std::cerr);
}
