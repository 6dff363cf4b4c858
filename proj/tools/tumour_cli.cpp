#include <iostream>

#include "tumour/cli/app.hpp"

int main(int argc, char** argv) { return tumour::cli::run(argc, argv, std::cout, std::cerr); }
