#pragma once

#include <stdexcept>
#include <string>

namespace levystore {

enum class ErrorCode {
  json_malformed,
  unknown_field,
  missing_field,
  invalid_type,
  invalid_value,
  stability_violation,
  insufficient_data,
  numeric_failure,
  io_failure,
  malformed_report,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::json_malformed: return "json_malformed";
    case ErrorCode::unknown_field: return "unknown_field";
    case ErrorCode::missing_field: return "missing_field";
    case ErrorCode::invalid_type: return "invalid_type";
    case ErrorCode::invalid_value: return "invalid_value";
    case ErrorCode::stability_violation: return "stability_violation";
    case ErrorCode::insufficient_data: return "insufficient_data";
    case ErrorCode::numeric_failure: return "numeric_failure";
    case ErrorCode::io_failure: return "io_failure";
    case ErrorCode::malformed_report: return "malformed_report";
  }
  return "unknown";
}

// All validation and runtime failures carry a stable code plus a message of
// the form "<field path>: <violated rule>" where a field is involved.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace levystore
