// specmon - analysis of finitely presented special monoids

#include <iostream>
#include <string>
#include <vector>

#include "specmon/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return specmon::cli::run(std::move(args), std::cout, std::cerr);
}
