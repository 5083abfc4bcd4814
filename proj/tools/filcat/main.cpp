#include <iostream>

#include "filcat/cli.hpp"

int main(int argc, char** argv) {
  return filcat::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
