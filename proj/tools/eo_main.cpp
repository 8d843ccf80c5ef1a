#include <iostream>
#include <string>
#include <vector>

#include "eo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eo::cli::run(args, std::cout, std::cerr, std::cin);
}
