#pragma once

#include "graphoid/projective.hpp"
#include "graphoid/puiseux.hpp"
#include "graphoid/rf_parser.hpp"

namespace graphoid {

struct BranchLimit {
  ProjValue value;
  /// (val(q o b) - val(p o b)) / m; positive means the limit is infinity.
  /// Zero when p vanishes identically on the branch.
  Rat leading_exponent;
  bool certified = false;
};

inline constexpr int kMaxLimitOrder = 96;

/// Limit of f at the center along the branch, t -> 0+. The truncation
/// order is doubled (up to kMaxLimitOrder) until both leading coefficients
/// are certified.
BranchLimit limit_along(const RationalFn& f, const PuiseuxBranch& b);

/// Limits along b and its conjugate agree: exactly for exact values,
/// within 1e-9 chordal otherwise.
bool conjugate_limits_equal(const RationalFn& f, const BranchSet& set, const PuiseuxBranch& b);

/// p(center + R^frame(t^m, psi(t))) to the series length of the branch.
Series compose_along(const BiPoly& p, const PuiseuxBranch& b);

}  // namespace graphoid
