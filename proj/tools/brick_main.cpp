#include <iostream>

#include "brick/cli.hpp"

int main(int argc, char** argv) { return brick::cli::main(argc, argv, std::cout, std::cerr); }
