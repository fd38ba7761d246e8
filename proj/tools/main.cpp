#include <iostream>

#include "bfly/cli.hpp"

int main(int argc, char** argv) {
    return bfly::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
