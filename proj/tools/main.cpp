#include <iostream>

#include "qinv/cli.hpp"

int main(int argc, char** argv)
{
    return qinv::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
