#include "padic/error.hpp"

namespace padic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonPadicDenominator: return "NonPadicDenominator";
    case ErrorKind::BadWindow: return "BadWindow";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::RankNotMinimal: return "RankNotMinimal";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::BadAlpha: return "BadAlpha";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool is_numeric(ErrorKind kind) noexcept {
  return kind == ErrorKind::PoleProximity || kind == ErrorKind::NotStabilized;
}

}  // namespace padic
