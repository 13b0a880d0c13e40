#include <iostream>

#include "rank1det/commands.hpp"

int main(int argc, char** argv) {
    return rank1det::run_cli(argc, argv, std::cout, std::cerr);
}
