#include <iostream>

#include "wolfkit/workbench.hpp"

int main(int argc, char** argv) { return wolfkit::run_workbench(argc, argv, std::cout, std::cerr); }
