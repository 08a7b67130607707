#include <iostream>

#include "uga/cli/cli.hpp"

int main(int argc, char** argv) { return uga::cli::run(argc, argv, std::cout, std::cerr); }
