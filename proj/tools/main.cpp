#include <iostream>
#include <string>
#include <vector>

#include "mindef/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mindef::cli::run_main(args, std::cin, std::cout, std::cerr);
}
