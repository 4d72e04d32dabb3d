#include "workbench/cli.hpp"

int main(int argc, char** argv) { return workbench::run(argc, argv); }
