#include <vector>
#include <string>

#include "gencls/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gencls::cli::run_cli(args);
}
