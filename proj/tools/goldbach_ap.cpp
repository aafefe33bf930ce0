#include <iostream>

#include "goldbach/cli.hpp"

int main(int argc, char** argv) { return goldbach::run_cli(argc, argv, std::cout, std::cerr); }
