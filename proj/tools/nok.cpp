#include "nok/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nok::run_cli(args, std::cout, std::cerr);
}
