#include <iostream>
#include <string>
#include <vector>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const hopfcone::cli::CliResult r = hopfcone::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
