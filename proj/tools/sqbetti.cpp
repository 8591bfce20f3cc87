#include "sqbetti/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto r = sqbetti::runArgs(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exitCode;
}
