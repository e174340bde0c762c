#include <iostream>

#include "cycleprefix/cli.hpp"

int main(int argc, char** argv) { return cycleprefix::cli::run(argc, argv, std::cout, std::cerr); }
