#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto r = gofk::cli::run({argv + 1, argv + argc});
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
