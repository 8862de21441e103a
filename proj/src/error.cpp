#include "sdimlab/error.hpp"

namespace sdim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_vertex: return "INVALID_VERTEX";
    case ErrorCode::self_loop: return "SELF_LOOP";
    case ErrorCode::disconnected_input: return "DISCONNECTED_INPUT";
    case ErrorCode::same_vertex: return "SAME_VERTEX";
    case ErrorCode::different_components: return "DIFFERENT_COMPONENTS";
    case ErrorCode::size_limit_exceeded: return "SIZE_LIMIT_EXCEEDED";
    case ErrorCode::invalid_params: return "INVALID_PARAMS";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::io_error: return "IO_ERROR";
    case ErrorCode::invariant_violation: return "INVARIANT_VIOLATION";
  }
  return "UNKNOWN";
}

}  // namespace sdim
