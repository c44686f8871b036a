#include "minlen/cli/run.hpp"

int main(int argc, char** argv) { return minlen::cli::run(argc, argv); }
