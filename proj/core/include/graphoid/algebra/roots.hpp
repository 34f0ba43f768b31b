#pragma once

#include <optional>
#include <vector>

#include "graphoid/algebra/bigfloat.hpp"
#include "graphoid/algebra/coef.hpp"
#include "graphoid/algebra/unipoly.hpp"

namespace graphoid {

struct RealRoot {
  BigFloat value;
  int multiplicity = 1;
  /// Set when the root is rational (recognized and verified exactly).
  std::optional<Rat> exact;
  /// Isolating interval [lo, hi]; lo == hi for exact roots.
  Rat lo, hi;

  Coef coef() const { return exact ? Coef(*exact) : Coef(value); }
};

/// All distinct real roots in increasing order, isolated by Sturm counts
/// and refined by bisection to width below 2^-(precision_bits - 8).
std::vector<RealRoot> isolate_real_roots(const UniPoly& p, int precision_bits = kDefaultPrecision);

/// Roots of p lying in the closed interval [a, b].
std::vector<RealRoot> real_roots_in(const UniPoly& p, const Rat& a, const Rat& b,
                                    int precision_bits = kDefaultPrecision);

/// Number of distinct real roots in (a, b] (Sturm).
int count_roots(const UniPoly& p, const Rat& a, const Rat& b);

/// Simplest rational (smallest denominator) in [lo, hi].
Rat simplest_rational(const Rat& lo, const Rat& hi);

/// Real roots of a polynomial whose coefficients are exact or balls.
/// Exact input is routed through isolate_real_roots. Inexact input is
/// solved numerically; roots are grouped by multiplicity and certified
/// by an interval Newton step on the (k-1)-th derivative.
std::vector<RealRoot> real_roots_coef(const std::vector<Coef>& coeffs,
                                      int precision_bits = kDefaultPrecision);

/// Cauchy bound: every complex root has modulus below the returned power of two.
Rat root_bound(const UniPoly& p);

}  // namespace graphoid
