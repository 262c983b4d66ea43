#include <iostream>

#include "k3/commands.hpp"

int main(int argc, char** argv) { return k3::run_cli(argc, argv, std::cout, std::cerr); }
