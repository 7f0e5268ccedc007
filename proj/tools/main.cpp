#include "gsqg/cli.hpp"

int main(int argc, char** argv) { return gsqg::run_cli(argc, argv); }
