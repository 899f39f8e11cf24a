#include <string>
#include <vector>

#include "dispgal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispgal::cli_run(args);
}
