#include "lya/cli.hpp"

int main(int argc, char** argv) { return lya::cli::run(argc, argv); }
