#include <iostream>

#include "curvcmp/cli/commands.hpp"

int main(int argc, char** argv) { return curvcmp::cli::run(argc, argv, std::cout, std::cerr, std::cin); }
