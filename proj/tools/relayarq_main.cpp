#include <iostream>

#include "relayarq/cli.hpp"

int main(int argc, char** argv) {
    return relayarq::cli::run(argc, argv, std::cout, std::cerr);
}
