#pragma once

#include <string>
#include <vector>

namespace orbitacc {

/// Dispatches the orbitacc command line.  args excludes the program name.
/// Exit codes: 0 success, 1 check/convergence failure, 2 usage error.
int run_cli(const std::vector<std::string>& args);

}  // namespace orbitacc
