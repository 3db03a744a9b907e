#include <iostream>

#include "hwcl/cli.hpp"

int main(int argc, char** argv) {
    return hwcl::run_cli(argc, argv, std::cout, std::cerr);
}
