#include <iostream>

#include "lensfill/cli/app.hpp"

int main(int argc, char** argv) { return lensfill::cli::run(argc, argv, std::cout, std::cerr); }
