#include <iostream>

#include "dubovsky/cli.hpp"

int main(int argc, char** argv) { return dubovsky::cli_main(argc, argv, std::cout, std::cerr); }
