#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monometric {

enum class ErrorKind {
  domain,
  not_hermitian,
  trace_mismatch,
  not_strictly_positive,
  numerical_failure,
  degenerate_spectrum,
  step_too_large,
  dimension_mismatch,
  bad_partition,
  not_column_stochastic,
  not_trace_preserving,
  non_unitary,
  parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception; `kind()` distinguishes the failure classes callers
/// are expected to branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace monometric
