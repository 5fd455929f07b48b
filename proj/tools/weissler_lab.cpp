#include <iostream>

#include "weissler/cli.hpp"

int main(int argc, char** argv) {
    return weissler::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
