#include <iostream>

#include "lieball_cli/cli.hpp"

int main(int argc, char** argv) { return lieball::cli::run(argc, argv, std::cout, std::cerr); }
