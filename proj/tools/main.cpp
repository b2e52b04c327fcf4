#include <iostream>

#include "dcn/cli.hpp"

int main(int argc, char** argv) {
  return dcn::cli::run(argc, argv, std::cout, std::cerr);
}
