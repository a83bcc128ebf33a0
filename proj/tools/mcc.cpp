#include "mcc/cli.hpp"

int main(int argc, char** argv) { return mcc::cli::run(argc, argv); }
