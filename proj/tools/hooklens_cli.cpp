#include <iostream>

#include "hooklens/cli.hpp"

int main(int argc, char** argv)
{
    return hooklens::cli::main_entry(argc, argv, std::cout, std::cerr);
}
