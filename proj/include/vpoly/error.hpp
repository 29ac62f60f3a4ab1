#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vpoly {

enum class ErrorKind {
  InvalidInput,
  EmptyInput,
  DimensionMismatch,
  DimensionBound,
  NotFullDimensional,
  NonIntegral,
  PointOnCurve,
  Inconsistent,
  NotCompatible,
  SizeBound,
  Numeric,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for all library failures. `kind()` is stable and
/// is what the CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vpoly
