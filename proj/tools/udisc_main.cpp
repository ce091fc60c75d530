#include <iostream>
#include <string>
#include <vector>

#include "udisc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return udisc::cli::run(args, std::cout, std::cerr);
}
