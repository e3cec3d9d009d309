#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcaframe {

enum class ErrorKind {
  Domain,
  VariantMismatch,
  Index,
  Unsupported,
  Construction,
  Precondition,
  Lattice,
  InterpolationUnsupported,
  Resource,
  Schema,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace lcaframe
