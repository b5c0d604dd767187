// Copyright 2026 The secamp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace secamp {

enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  size_limit = 3,
  domain = 4,
  unsupported = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what,
                    ErrorCode code = ErrorCode::invalid_argument) {
  if (!cond) throw Error(code, what);
}

}  // namespace secamp
