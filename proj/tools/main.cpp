#include "parabolic/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return parabolic::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
