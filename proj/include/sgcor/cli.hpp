#pragma once

#include <ostream>
#include <span>
#include <string>

namespace sgcor {

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
/// success, 1 on a computation error, 2 on a usage or input error.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sgcor
