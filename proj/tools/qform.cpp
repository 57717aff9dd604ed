#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "qf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string stdin_text;
    for (const auto& a : args)
        if (a == "-") {
            stdin_text.assign(std::istreambuf_iterator<char>(std::cin),
                              std::istreambuf_iterator<char>());
            break;
        }
    qf::cli::RunResult res = qf::cli::run(args, stdin_text);
    std::cout << res.output;
    return res.exit_code;
}
