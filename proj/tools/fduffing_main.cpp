#include <iostream>

#include "fduffing/cli/commands.hpp"

int main(int argc, char** argv) {
    return fduffing::cli::run_cli(argc, argv, std::cout, std::cerr);
}
