#include <iostream>

#include "tradekit/cli.hpp"

int main(int argc, char** argv) {
  tradekit::apply_thread_limit();
  return tradekit::run_cli(argc, argv, std::cout, std::cerr);
}
