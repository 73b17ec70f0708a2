#pragma once

#include <stdexcept>
#include <string>

namespace hsg {

enum class ErrorCode {
  invalid_argument,
  parse,
  cyclic_quiver,
  duplicate_name,
  unknown_vertex,
  unknown_object,
  invalid_category,
  quiver_mismatch,
  dimension_mismatch,
  not_dynkin,
  decomposable,
  inconclusive,
  resolution_depth_exceeded,
  margin_violation,
  projective_summand,
  not_local,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Kebab-case name used in reports and by the C API.
inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::cyclic_quiver: return "cyclic-quiver";
    case ErrorCode::duplicate_name: return "duplicate-name";
    case ErrorCode::unknown_vertex: return "unknown-vertex";
    case ErrorCode::unknown_object: return "unknown-object";
    case ErrorCode::invalid_category: return "invalid-category";
    case ErrorCode::quiver_mismatch: return "quiver-mismatch";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::not_dynkin: return "not-dynkin";
    case ErrorCode::decomposable: return "decomposable";
    case ErrorCode::inconclusive: return "inconclusive";
    case ErrorCode::resolution_depth_exceeded: return "resolution-depth-exceeded";
    case ErrorCode::margin_violation: return "margin-violation";
    case ErrorCode::projective_summand: return "projective-summand";
    case ErrorCode::not_local: return "not-local";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hsg
