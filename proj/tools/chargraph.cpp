#include "chargraph/cli.hpp"

int main(int argc, char** argv) { return chargraph::cli::run(argc, argv); }
