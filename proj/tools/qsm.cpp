#include <iostream>

#include "qsm/app/commands.hpp"

int main(int argc, char** argv) { return qsm::app::run_cli(argc, argv, std::cout, std::cerr); }
