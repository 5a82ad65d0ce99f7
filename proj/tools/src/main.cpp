#include "stabctab/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stabctab::cli::run(args, std::cout, std::cerr);
}
