#include "dtup/cli.hpp"

int main(int argc, char** argv) { return dtup::cli::main_entry(argc, argv); }
