#include <iostream>

#include "hyperalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = hyperalg::cli::run(args);
    auto& out = result.exit_code == 2 ? std::cerr : std::cout;
    if (result.json) out << result.payload.dump(2) << "\n";
    else out << result.text;
    return result.exit_code;
}
