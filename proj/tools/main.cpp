#include <iostream>

#include <wittkit/cli.hpp>

int main(int argc, char **argv) { return wittkit::cli::dispatch(argc, argv, std::cout, std::cerr); }
