#include <iostream>

#include "bisym/cli.hpp"

int main(int argc, char** argv) {
    return bisym::cli::run(argc, argv, std::cout, std::cerr);
}
