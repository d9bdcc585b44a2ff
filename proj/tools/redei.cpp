#include <iostream>

#include "redei/commands.hpp"

int main(int argc, char** argv) { return redei::run_cli(argc, argv, std::cout, std::cerr); }
