#include <iostream>

#include "dodgson/cli.hpp"

int main(int argc, char** argv) {
    return dodgson::run_cli(argc, argv, std::cout, std::cerr);
}
