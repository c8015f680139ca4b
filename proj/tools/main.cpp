#include <iostream>
#include <string>
#include <vector>

#include "lowsum/harness.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lowsum::run_cli(args, std::cout, std::cerr);
}
