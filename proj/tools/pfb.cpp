#include <iostream>
#include <string>
#include <vector>

#include "pfb/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = pfb::cli::run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
