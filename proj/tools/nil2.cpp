#include <iostream>

#include "nil2/cli.hpp"

int main(int argc, char** argv) {
  return nil2::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
