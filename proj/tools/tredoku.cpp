#include "tredoku/io.hpp"
int main(int argc, char** argv) { return tredoku::run_cli(argc, argv); }
