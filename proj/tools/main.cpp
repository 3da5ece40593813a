#include "isoprod_cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return isoprod::cli::run(argc, argv, std::cout, std::cerr);
}
