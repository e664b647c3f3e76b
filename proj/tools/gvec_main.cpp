#include <iostream>

#include "gvec/cli/commands.hpp"

int main(int argc, char** argv) { return gvec::cli::run(argc, argv, std::cout, std::cerr); }
