#include <iostream>

#include "sconn/cli.hpp"

int main(int argc, char** argv) { return sconn::cli::run(argc, argv, std::cout, std::cerr); }
