#include <iostream>
#include <string>
#include <vector>

#include "nefkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nefkit::runCli(args, std::cout, std::cerr);
}
