#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padic {

enum class ErrorKind {
  InvalidArgument,
  NonPadicDenominator,
  BadWindow,
  ZeroArgument,
  PoleProximity,
  NotStabilized,
  NotMultiplicative,
  RankNotMinimal,
  BadTable,
  BadAlpha,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and is what the
/// CLI maps to exit codes; the message names the offending parameters.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Pole proximity and unstabilized sums are properties of the numerics, not
/// of malformed input.
bool is_numeric(ErrorKind kind) noexcept;

}  // namespace padic
