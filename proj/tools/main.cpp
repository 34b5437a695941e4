#include <iostream>

#include "sim_cli.hpp"

int main(int argc, char** argv) { return rmpc::cli::run(argc, argv, std::cerr); }
