#include "ccg/cli.hpp"

int main(int argc, char** argv) {
    return ccg::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
