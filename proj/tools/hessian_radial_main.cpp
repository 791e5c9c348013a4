#include <iostream>

#include "hessian_radial/cli.hpp"

int main(int argc, char** argv) {
    return hessian_radial::cli::run(argc, argv, std::cout, std::cerr);
}
