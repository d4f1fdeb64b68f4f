#include <iostream>

#include "sidonkit/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sidonkit::dispatch(args, std::cout, std::cerr);
}
