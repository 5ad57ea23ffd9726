#include <iostream>

#include "ntlab/cli.hpp"

int main(int argc, char** argv) { return ntlab::cli::run(argc, argv, std::cout, std::cerr); }
