/* vim: set sw=4 sts=4 et : */

#include <polychi/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return polychi::run_cli(argc, argv, std::cout, std::cerr);
}
