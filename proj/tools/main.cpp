#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return co31::cli::run(argc, argv, std::cout, std::cerr); }
