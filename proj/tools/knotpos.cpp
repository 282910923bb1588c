#include "cli.hpp"

int main(int argc, char** argv) { return knotpos::cli::run_cli(argc, argv); }
