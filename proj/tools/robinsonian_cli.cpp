#include <iostream>

#include "robinsonian/cli.hpp"

int main(int argc, char** argv) { return robinsonian::cli::main_entry(argc, argv, std::cout, std::cerr); }
