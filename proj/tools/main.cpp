#include <iostream>

#include "hanoi/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return hanoi::cli::run(argc, argv, std::cout, std::cerr);
}
