#include "nvcat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    auto res = nvcat::run_cli(args);
    std::cout << res.output;
    std::cerr << res.error;
    return res.exit_code;
}
