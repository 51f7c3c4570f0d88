#include "cycode/cli.hpp"

int main(int argc, char** argv) { return cycode::run_cli(argc, argv); }
