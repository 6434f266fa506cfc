#include "cli.hpp"

int main(int argc, char** argv) { return mediankit::cli::run_main(argc, argv); }
