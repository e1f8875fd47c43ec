#include "commands.hpp"

int main(int argc, char** argv) { return dgsp::cli::run(argc, argv); }
