#include <iostream>
#include <vector>

#include "tdpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tdpoly::run_cli(std::move(args), std::cout, std::cerr);
}
