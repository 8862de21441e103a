#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdim {

enum class ErrorCode {
  invalid_vertex,
  self_loop,
  disconnected_input,
  same_vertex,
  different_components,
  size_limit_exceeded,
  invalid_params,
  parse_error,
  io_error,
  invariant_violation,
};

/// Stable upper-case identifier, e.g. "DISCONNECTED_INPUT".
std::string_view to_string(ErrorCode code) noexcept;

/// Domain error carrying a typed code. Every failure raised by the library
/// derives from this.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sdim
