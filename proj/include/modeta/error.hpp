#pragma once

#include <stdexcept>
#include <string>

namespace modeta {

enum class ErrorCode {
  invalid_argument,
  parse,
  dimension_mismatch,
  not_characteristic,
  not_primitive,
  precondition,
  unsolvable,
  internal,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures are reported through this type. Internal means an
// invariant of the mathematics was violated, everything else is bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace modeta
