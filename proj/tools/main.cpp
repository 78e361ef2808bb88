#include "indcover/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return indcover::cli::run(argc, argv, std::cout, std::cerr); }
