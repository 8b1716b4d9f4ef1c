#include <iostream>
#include <string>
#include <vector>

#include "sockpath/cli.hpp"
#include "sockpath/errors.hpp"

int main(int argc, char** argv) {
    sockpath::cli::Environment env;
    try {
        env = sockpath::cli::environment_from_process();
    } catch (const sockpath::MalformedInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sockpath::cli::kExitUsage;
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return sockpath::cli::run(args, std::cout, std::cerr, env);
}
