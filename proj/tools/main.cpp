#include <iostream>

#include "pldual/cli.hpp"

int main(int argc, char** argv) { return pldual::run_cli(argc, argv, std::cout, std::cerr); }
