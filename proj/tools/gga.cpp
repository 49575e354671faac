#include <iostream>

#include "gga_cli.hpp"

int main(int argc, char **argv)
{
    return gga::cli::main_entry(argc, argv, std::cout, std::cerr);
}
