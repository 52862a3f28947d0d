#include "convdual/cli.hpp"

int main(int argc, char** argv) { return convdual::run_cli(argc, argv); }
