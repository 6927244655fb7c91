#include "dml/shell/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dml::run_cli(argc, argv, std::cout, std::cerr); }
