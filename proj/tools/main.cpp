#include <iostream>

#include "chromzero/cli.hpp"

int main(int argc, char** argv) { return chromzero::run_cli(argc, argv, std::cout, std::cerr); }
