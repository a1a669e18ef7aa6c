#include "permfact/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return permfact::run_cli(argc, argv, std::cout, std::cerr); }
