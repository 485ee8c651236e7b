#include <iostream>

#include "fracleib/cli.hpp"

int main(int argc, char** argv) {
    return fracleib::run_cli(argc, argv, std::cout, std::cerr);
}
