#include <iostream>
#include <string>
#include <vector>

#include <xintersect/cli.hpp>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return xintersect::cli::run(args, std::cout, std::cerr);
}
