#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  qm::cli::Environment env;
  if (const char* s = std::getenv("QM_SEED")) env.seed = s;
  return qm::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr, env);
}
