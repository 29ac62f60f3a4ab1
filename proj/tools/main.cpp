#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vpoly::cli::main(argc, argv, std::cout, std::cerr); }
