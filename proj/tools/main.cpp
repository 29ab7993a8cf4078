#include <iostream>

#include "metatheta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return metatheta::cli::run(args, std::cout, std::cerr);
}
