#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace primrt {

/// Machine-readable failure category. The CLI maps each one to a distinct
/// exit status and prints the name in its error line.
enum class ErrorKind {
  dimension,
  not_nz,
  out_of_range,
  parse,
  cap_exceeded,
  limit_exhausted,
  not_primitive,
  no_path,
  usage,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::not_nz: return "not-nz";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::parse: return "parse";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::limit_exhausted: return "limit-exhausted";
    case ErrorKind::not_primitive: return "not-primitive";
    case ErrorKind::no_path: return "no-path";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace primrt
