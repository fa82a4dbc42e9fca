#include <iostream>

#include "cdeig/cli.hpp"

int main(int argc, char** argv) { return cdeig::cli::run(argc, argv, std::cout, std::cerr); }
