#include <iostream>

#include "tpmine/cli.hpp"

int main(int argc, char** argv) { return tpmine::run_cli(argc, argv, std::cout, std::cerr); }
