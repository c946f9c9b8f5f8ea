#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tricolor::cli::main(argc, argv, std::cout, std::cerr); }
