#pragma once

#include <stdexcept>
#include <string>

namespace liefrob {

/// Error categories; the C API maps these 1:1 onto lf_status codes.
enum class ErrorCode {
  Parse,
  Validation,
  Verification,
  NotFrobenius,
  Argument,
  Unsupported,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void throwError(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace liefrob
