#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sumset {

enum class ErrorCode {
  invalid_range,
  overflow,
  arity,
  unsupported_class,
  hypothesis,
  oracle_refused,
  internal_inconsistency,
  space_too_large,
  parse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_range: return "invalid-range";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::arity: return "arity";
    case ErrorCode::unsupported_class: return "unsupported-class";
    case ErrorCode::hypothesis: return "hypothesis";
    case ErrorCode::oracle_refused: return "oracle-refused";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
    case ErrorCode::space_too_large: return "space-too-large";
    case ErrorCode::parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Checked 64-bit arithmetic. Overflow is an error, never wraparound.
namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::overflow, std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorCode::overflow, std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::overflow, std::to_string(a) + " * " + std::to_string(b));
  return out;
}

}  // namespace checked
}  // namespace sumset
