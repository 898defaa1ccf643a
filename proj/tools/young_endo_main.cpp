#include <iostream>
#include <string>
#include <vector>

#include "young_endo/cli_commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return young_endo::run_command(args, std::cout, std::cerr);
}
