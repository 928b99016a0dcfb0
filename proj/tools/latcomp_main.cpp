#include <string>
#include <vector>

#include "latcomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return latcomp::cli::run_cli(args);
}
