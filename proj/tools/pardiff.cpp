#include <iostream>
#include <string>
#include <vector>

#include "diffusion/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return diffusion::cli::run(args, std::cin, std::cout, std::cerr);
}
