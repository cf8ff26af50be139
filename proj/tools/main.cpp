#include <iostream>

#include "reflexpm/cli.hpp"

int main(int argc, char** argv) { return reflexpm::cli::run(argc, argv, std::cout, std::cerr); }
