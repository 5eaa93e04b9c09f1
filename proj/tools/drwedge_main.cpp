#include <string>
#include <vector>

#include "drwedge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return drwedge::run_cli(args);
}
