#include <iostream>
#include <string>
#include <vector>

#include "conley/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    conley::cli::Outcome out = conley::cli::run(args);
    std::cout << out.text;
    return out.exit_code;
}
