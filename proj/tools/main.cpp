#include "hypwin/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hypwin::cli::run(argc, argv, std::cout, std::cerr); }
