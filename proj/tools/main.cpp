#include <iostream>

#include "cctr/cli.hpp"

int main(int argc, char** argv) { return cctr::run_cli(argc, argv, std::cout, std::cerr); }
