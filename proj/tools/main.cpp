#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return omegalab::cli::run_cli(argc, argv, std::cout, std::cerr); }
