#include <iostream>
#include <string>
#include <vector>

#include "flashcodes/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return flashcodes::cli::run(args, std::cin, std::cout, std::cerr);
}
