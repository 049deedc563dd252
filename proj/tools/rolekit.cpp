//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>
#include <string>
#include <vector>

#include "rolekit/cli.h"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rolekit::cli::run(args, std::cout, std::cerr);
}
