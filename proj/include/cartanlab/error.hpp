#pragma once

#include <stdexcept>
#include <string>

namespace cartanlab {

enum class ErrorCode {
  invalid_dimension,
  dimension_mismatch,
  ambient_mismatch,
  not_triangular,
  not_in_group,
  not_closed,
  not_independent,
  invalid_params,
  unrealizable,
  real_eigenvalue,
  unsupported_input,
  insufficient_data,
  hypothesis_violated,
  no_prediction,
  unknown_label,
  parse_error,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::ambient_mismatch: return "ambient-mismatch";
    case ErrorCode::not_triangular: return "not-triangular";
    case ErrorCode::not_in_group: return "not-in-group";
    case ErrorCode::not_closed: return "not-closed";
    case ErrorCode::not_independent: return "not-independent";
    case ErrorCode::invalid_params: return "invalid-params";
    case ErrorCode::unrealizable: return "unrealizable";
    case ErrorCode::real_eigenvalue: return "real-eigenvalue";
    case ErrorCode::unsupported_input: return "unsupported-input";
    case ErrorCode::insufficient_data: return "insufficient-data";
    case ErrorCode::hypothesis_violated: return "hypothesis-violated";
    case ErrorCode::no_prediction: return "no-prediction";
    case ErrorCode::unknown_label: return "unknown-label";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cartanlab
