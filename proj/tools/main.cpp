#include "ffheight/cli.hpp"

int main(int argc, char** argv) { return ffheight::cli_main(argc, argv); }
