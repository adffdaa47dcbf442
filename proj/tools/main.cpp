#include <iostream>
#include <string>
#include <vector>

#include "semcom/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return semcom::cli_main(args, std::cout, std::cerr);
}
