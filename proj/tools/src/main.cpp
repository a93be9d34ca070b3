#include "cli.hpp"

int main(int argc, char** argv) { return niggli::cli::run(argc, argv); }
