#include <iostream>
#include <string>
#include <vector>

#include "padisc/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return padisc::run(args, std::cout, std::cerr);
}
