#include "g2roll/cli.hpp"

int main(int argc, char** argv) { return g2roll::cli::run(argc, argv); }
