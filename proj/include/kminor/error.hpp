#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kminor {

enum class ErrorKind {
  invalid_argument,
  density_too_low,
  precondition_violated,
  core_extraction_failed,
  sampler_failed,
  join_overflow,
  malformed_certificate,
  size_cap_exceeded,
  parse,
  internal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::density_too_low: return "density too low";
    case ErrorKind::precondition_violated: return "lemma precondition violated";
    case ErrorKind::core_extraction_failed: return "core extraction failed";
    case ErrorKind::sampler_failed: return "sampler failed";
    case ErrorKind::join_overflow: return "join overflow";
    case ErrorKind::malformed_certificate: return "malformed certificate";
    case ErrorKind::size_cap_exceeded: return "size cap exceeded";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::internal: return "internal invariant violated";
  }
  return "unknown error";
}

/// Every failure raised by the library. The message always starts with the
/// kind's name so callers that only print what() still get a stable prefix.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(compose(kind, detail)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& detail) {
    std::string msg(to_string(kind));
    if (!detail.empty()) {
      msg += ": ";
      msg += detail;
    }
    return msg;
  }

  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail = {}) {
  throw Error(kind, detail);
}

inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::internal, what);
}

}  // namespace kminor
