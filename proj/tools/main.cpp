#include <iostream>

#include "liedeform/cli.hpp"

int main(int argc, char** argv) { return liedeform::run_cli(argc, argv, std::cout, std::cerr); }
