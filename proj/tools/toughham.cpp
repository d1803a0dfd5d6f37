#include <iostream>
#include <string>
#include <vector>

#include "toughham/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return toughham::cli_main(args, std::cin, std::cout, std::cerr);
}
