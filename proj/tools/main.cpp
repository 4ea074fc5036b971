#include <iostream>
#include <string>
#include <vector>

#include "gaussinterp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return gaussinterp::cli::parse_and_dispatch(args, std::cout, std::cerr);
}
