#pragma once

#include <stdexcept>
#include <string>

namespace dragon {

enum class ErrorCode {
  kDomain = 1,
  kResource = 2,
  kPrecondition = 3,
  kNotFound = 4,
  kNoSignChange = 5,
};

// Base exception for all library failures; `code()` maps onto the C API
// status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dragon
