#include <iostream>

#include "primcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return primcover::cli::run_cli(args, std::cout, std::cerr);
}
