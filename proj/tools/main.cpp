#include "tconf/cli.hpp"

int main(int argc, char** argv) { return tconf::run_cli(argc, argv); }
