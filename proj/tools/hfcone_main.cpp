#include <iostream>

#include "hfcone/cli.hpp"

int main(int argc, char** argv) { return hfcone::cli::run(argc, argv, std::cout, std::cerr); }
