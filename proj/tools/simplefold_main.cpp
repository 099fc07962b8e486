#include <iostream>

#include "simplefold/cli.hpp"

int main(int argc, char** argv) { return simplefold::cli::run(argc, argv, std::cout, std::cerr); }
