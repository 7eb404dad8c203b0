#include <iostream>

#include "bj/cli/commands.hpp"

int main(int argc, char** argv) {
  return bj::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
