#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return char1::cli::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
