#include <string>
#include <vector>

#include "ccx/cli.hpp"

int main(int argc, char** argv) {
  return ccx::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
