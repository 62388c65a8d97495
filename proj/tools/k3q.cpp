#include "k3q/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return k3q::run_cli(argc, argv, std::cout, std::cerr); }
