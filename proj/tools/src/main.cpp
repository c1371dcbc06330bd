#include <iostream>

#include "hlcbs/cli.hpp"

int main(int argc, char** argv) { return hlcbs::cli::run(argc, argv, std::cout, std::cerr); }
