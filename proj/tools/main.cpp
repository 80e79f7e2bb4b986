#include "blockpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return blockpoly::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
