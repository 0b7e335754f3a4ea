#include "adjoint/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = adjoint::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
