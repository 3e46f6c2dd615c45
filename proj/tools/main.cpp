#include <iostream>

#include "alia/cli.hpp"

int main(int argc, char** argv) { return alia::cli::run(argc, argv, std::cout, std::cerr); }
