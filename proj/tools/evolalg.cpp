#include <iostream>
#include <string>
#include <vector>

#include "evolalg/cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return evolalg::cli::run(args, std::cout, std::cerr);
}
