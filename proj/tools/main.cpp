#include <vector>

#include "orbitacc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orbitacc::run_cli(args);
}
