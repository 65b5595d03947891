#include <iostream>
#include <string>
#include <vector>

#include "bookfold/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bookfold::cli_main(args, std::cout, std::cerr);
}
