#include <iostream>

#include "graphoid/cli/cli.hpp"

int main(int argc, char** argv) { return graphoid::cli::run(argc, argv, std::cout, std::cerr); }
