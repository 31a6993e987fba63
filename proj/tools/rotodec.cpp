#include <iostream>

#include "rotodec/cli.hpp"

int main(int argc, char** argv)
{
    return rotodec::cli::run(argc, argv, std::cout, std::cerr);
}
