#include <iostream>

#include "cubicfrac_cli/cli.hpp"

int main(int argc, char** argv) { return cubicfrac::cli::run(argc, argv, std::cout, std::cerr); }
