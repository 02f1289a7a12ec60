#include <iostream>
#include <string>
#include <vector>

#include "limitgrp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return limitgrp::run_cli(args, std::cout, std::cerr);
}
