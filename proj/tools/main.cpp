#include <iostream>
#include <vector>

#include "torusfp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return torusfp::run_cli(std::move(args), std::cout, std::cerr);
}
