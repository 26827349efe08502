#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace actalab::cli {

  // Runs one command line (without the program name). Returns the exit code:
  // 0 success or holds, 1 a failing verdict, 2 usage or validation errors.
  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err);

}  // namespace actalab::cli
