#include <iostream>

#include "collatz/cli.hpp"

int main(int argc, char** argv)
{
    return collatz::run_cli(argc, argv, std::cout, std::cerr);
}
