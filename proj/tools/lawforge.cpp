#include <iostream>

#include "lawforge/cli.hpp"

int main(int argc, char** argv) {
  return lawforge::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
