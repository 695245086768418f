#include <iostream>

#include "etalepi/cli.hpp"

int main(int argc, char** argv) { return etalepi::run_cli(argc, argv, std::cout, std::cerr); }
