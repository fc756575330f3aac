#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = wreath::cli::run(args);
    (result.exit_code == wreath::cli::kOk || result.exit_code == wreath::cli::kVerification ? std::cout : std::cerr)
        << result.output();
    return result.exit_code;
}
