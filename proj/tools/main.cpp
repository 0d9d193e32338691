#include "ll/cli.hpp"

int main(int argc, char** argv) { return ll::cli::run(argc, argv); }
