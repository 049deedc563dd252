//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_CLI_H_
#define ROLEKIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace rolekit::cli {

enum ExitCode {
  kOk = 0,
  kIoError = 1,
  kBadConfig = 2,
  kSizeGuard = 3,
  kPropertyViolation = 4,
};

// Runs the command line `args` (args[0] is the program name). Data goes to
// `out` when the output path is "-", diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rolekit::cli

#endif  // ROLEKIT_CLI_H_
