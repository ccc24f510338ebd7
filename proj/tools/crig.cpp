#include "crig/cli.hpp"

int main(int argc, char** argv) { return crig::run_cli(argc, argv); }
