#include "fibcurve/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fibcurve::cli::run(argc, argv, std::cout, std::cerr); }
