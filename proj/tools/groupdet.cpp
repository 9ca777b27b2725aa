#include <iostream>

#include "groupdet/cli.hpp"

int main(int argc, char** argv) { return groupdet::cli::run(argc, argv, std::cout, std::cerr); }
