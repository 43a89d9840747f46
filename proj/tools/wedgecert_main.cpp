#include <iostream>
#include <string>
#include <vector>

#include "wedgecert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wedgecert::run_cli(args, std::cout, std::cerr);
}
