#include "qptheta/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const qptheta::CommandResult result = qptheta::run_command(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
