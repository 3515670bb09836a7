#include <iostream>
#include <string>
#include <vector>

#include "arborkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return arborkit::dispatch(args, std::cout, std::cerr);
}
