#include <iostream>

#include "vekua/cli.hpp"

int main(int argc, char **argv) { return vekua::cli::run(argc, argv, std::cout, std::cerr); }
