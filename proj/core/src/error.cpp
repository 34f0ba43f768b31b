#include "graphoid/error.hpp"

namespace graphoid {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DegenerateInput: return "algebra.DegenerateInput";
    case Errc::PrecisionLoss: return "algebra.PrecisionLoss";
    case Errc::SyntaxError: return "rf_parser.SyntaxError";
    case Errc::DivisionByZeroPoly: return "rf_parser.DivisionByZeroPoly";
    case Errc::ConstantFunction: return "rf_parser.ConstantFunction";
    case Errc::OutOfSegment: return "projective.OutOfSegment";
    case Errc::TooFewPoints: return "projective.TooFewPoints";
    case Errc::NoOrigin: return "puiseux.NoOrigin";
    case Errc::TruncationInsufficient: return "puiseux.TruncationInsufficient";
    case Errc::IndeterminateOnBranch: return "limits.IndeterminateOnBranch";
    case Errc::RadiusNotSmall: return "graphoid.RadiusNotSmall";
    case Errc::SingularOnBoundary: return "graphoid.SingularOnBoundary";
    case Errc::NoConvergence: return "graphoid.NoConvergence";
    case Errc::CellStraddle: return "graphoid.CellStraddle";
    case Errc::UnderSampled: return "degree.UnderSampled";
    case Errc::NoRegularValue: return "degree.NoRegularValue";
    case Errc::NonIntegralWinding: return "degree.NonIntegralWinding";
    case Errc::GeometryViolation: return "degree.GeometryViolation";
    case Errc::InjectivityFailure: return "degree.InjectivityFailure";
    case Errc::WrongShape: return "degree.WrongShape";
    case Errc::InputError: return "cli.InputError";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error(Errc::SyntaxError, message + " at offset " + std::to_string(offset)),
      offset_(offset),
      reason_(message) {}

}  // namespace graphoid
