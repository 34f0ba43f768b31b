#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphoid {

enum class Errc {
  // algebra
  DegenerateInput,
  PrecisionLoss,
  // rf_parser
  SyntaxError,
  DivisionByZeroPoly,
  ConstantFunction,
  // projective
  OutOfSegment,
  TooFewPoints,
  // puiseux
  NoOrigin,
  TruncationInsufficient,
  // limits
  IndeterminateOnBranch,
  // graphoid
  RadiusNotSmall,
  SingularOnBoundary,
  NoConvergence,
  CellStraddle,
  // degree
  UnderSampled,
  NoRegularValue,
  NonIntegralWinding,
  GeometryViolation,
  InjectivityFailure,
  WrongShape,
  // cli
  InputError,
};

/// Module-qualified name such as "puiseux.TruncationInsufficient".
std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  std::string qualified_code() const { return std::string(errc_name(code_)); }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  /// Message without the offset suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace graphoid
