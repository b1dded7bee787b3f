#include <string>
#include <vector>

#include "opradius/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return opradius::run_cli(std::move(args));
}
