#include <iostream>
#include <vector>

#include "hornfit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hornfit::run_cli(args, std::cout, std::cerr);
}
