#include <iostream>

#include "ballot/cli.hpp"

int main(int argc, char** argv) { return ballot::cli::main(argc, argv, std::cout, std::cerr); }
