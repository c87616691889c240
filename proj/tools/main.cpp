#include <iostream>
#include <string>
#include <vector>

#include "sketchmatch/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return sketchmatch::run_cli(args, std::cout, std::cerr);
}
