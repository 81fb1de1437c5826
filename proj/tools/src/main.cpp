#include <iostream>

#include "bsym_cli/app.hpp"

int main(int argc, char** argv) { return bsym::cli::run(argc, argv, std::cout, std::cerr); }
