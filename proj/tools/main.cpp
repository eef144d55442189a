#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  return uxagent::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
