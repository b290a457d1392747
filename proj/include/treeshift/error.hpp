// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace treeshift {

enum class ErrorCode {
  InvalidArgument = 1,
  ParseError = 2,
  LimitExceeded = 3,
  BudgetExceeded = 4,
  DegenerateSystem = 5,
  EmptyShift = 6,
  Internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace treeshift
