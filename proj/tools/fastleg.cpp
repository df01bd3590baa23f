#include "fastleg/cli.hpp"

int main(int argc, char** argv) { return fastleg::cli::run(argc, argv); }
