#include "cli.hpp"

int main(int argc, char** argv) { return locavg::cli_main(argc, argv); }
