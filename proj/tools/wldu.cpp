#include <iostream>

#include "wldu/cli.hpp"

int main(int argc, char** argv) { return wldu::run_cli(argc, argv, std::cout, std::cerr); }
