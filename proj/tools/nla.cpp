#include "nla/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nla::cli::run(argc, argv, std::cout, std::cerr); }
