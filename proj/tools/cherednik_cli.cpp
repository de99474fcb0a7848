/// @file cherednik_cli.cpp
/// @brief Command-line entry point; all logic lives in the library.

#include <iostream>
#include <string>
#include <vector>

#include "cherednik/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cherednik::run_cli(args, std::cout, std::cerr);
}
