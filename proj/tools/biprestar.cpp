#include <iostream>
#include <string>
#include <vector>

#include "biprestar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return biprestar::cli::run(args, std::cout, std::cerr);
}
