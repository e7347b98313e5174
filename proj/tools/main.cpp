#include <iostream>
#include <vector>

#include "liegrad/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liegrad::run_cli(args, std::cout, std::cerr);
}
