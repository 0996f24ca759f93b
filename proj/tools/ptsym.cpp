#include <iostream>

#include "ptsym/cli.hpp"

int main(int argc, char** argv) { return ptsym::cli::run(argc, argv, std::cout, std::cerr); }
