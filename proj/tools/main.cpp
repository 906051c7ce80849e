#include <iostream>

#include "bergcomm/cli.hpp"

int main(int argc, char** argv) { return bergcomm::run_cli(argc, argv, std::cout, std::cerr); }
