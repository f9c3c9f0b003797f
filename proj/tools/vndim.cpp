#include <iostream>

#include "vndim_cli.hpp"

int main(int argc, char** argv) { return vndim::cli::run(argc, argv, std::cout, std::cerr); }
