#include "cli.hpp"

int main(int argc, char** argv) { return qzeta::cli::run(argc, argv, std::cout, std::cerr); }
