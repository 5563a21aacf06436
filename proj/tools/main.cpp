#include "cvm/experiments.hpp"

int main(int argc, char** argv) { return cvm::run_cli(argc, argv); }
