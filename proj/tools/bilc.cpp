#include "bilc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bilc::run_cli(argc, argv, std::cout, std::cerr); }
