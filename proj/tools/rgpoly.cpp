#include <iostream>
#include <string>
#include <vector>

#include "rgpoly/graphio.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rgpoly::run(args, std::cout, std::cerr);
}
