#include <iostream>

#include "ballft/cli.hpp"

int main(int argc, char** argv) { return ballft::cli::run(argc, argv, std::cout, std::cerr); }
