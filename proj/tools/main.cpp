#include <iostream>

#include "mononeedle/cli.hpp"

int main(int argc, char** argv) { return mononeedle::cli::run_cli(argc, argv, std::cout, std::cerr); }
