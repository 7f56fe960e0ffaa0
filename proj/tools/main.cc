#include "commands.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return crystals::cli::run(argc, argv, std::cout, std::cerr);
}
