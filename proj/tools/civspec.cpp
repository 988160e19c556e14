#include <iostream>

#include "civspec/cli/commands.hpp"

int main(int argc, char** argv) { return civspec::cli::run_cli(argc, argv, std::cout, std::cerr); }
