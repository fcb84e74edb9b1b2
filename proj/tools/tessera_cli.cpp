#include <iostream>
#include <string>
#include <vector>

#include "tessera/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return tessera::cli_run(args, std::cout, std::cerr);
}
