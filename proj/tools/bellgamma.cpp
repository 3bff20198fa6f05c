#include "bellgamma/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bellgamma::cli::run_cli(argc, argv, std::cout, std::cerr); }
