#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  linper::cli::RunConfig config;
  if (auto code = linper::cli::parse_command_line(argc, argv, config, std::cout, std::cerr)) return *code;
  return linper::cli::run(config, std::cout, std::cerr);
}
