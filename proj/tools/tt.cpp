#include <iostream>

#include "tt/cli.hpp"

int main(int argc, char** argv) { return tt::run_cli(argc, argv, std::cout, std::cerr); }
