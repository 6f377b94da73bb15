#include <vector>

#include "rrts/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rrts::cli_main(args);
}
