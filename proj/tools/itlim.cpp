#include <iostream>

#include <itlim/cli.hpp>

int main(int argc, char **argv)
{
    return itlim::cli::run(argc, argv, std::cout, std::cerr);
}
