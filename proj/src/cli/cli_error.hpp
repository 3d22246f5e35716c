#pragma once

#include <stdexcept>
#include <string>

namespace sgcor::cli {

/// Usage or input problem; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sgcor::cli
