#include <iostream>

#include "phaserank/cli.hpp"

int main(int argc, char** argv) { return phaserank::cli::run(argc, argv, std::cout, std::cerr); }
