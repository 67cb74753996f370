#pragma once

#include <stdexcept>
#include <string>

namespace qtorb {

// Error taxonomy shared by the library and the C API / CLI:
//   InvalidArgument -> caller asked for something impossible (maps to usage errors),
//   InvalidModel    -> input data fails validation,
//   Internal        -> an internal invariant was violated; always a bug.
enum class ErrorCode {
  InvalidArgument,
  InvalidModel,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_internal(const std::string& message) {
  throw Error(ErrorCode::Internal, "internal invariant violated: " + message);
}

} // namespace qtorb
