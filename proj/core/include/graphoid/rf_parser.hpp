#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphoid/algebra/bipoly.hpp"
#include "graphoid/algebra/point.hpp"

namespace graphoid {

/// f = p / q with p, q coprime, q primitive with positive leading coefficient.
class RationalFn {
 public:
  RationalFn() : q_(BiPoly::constant(Rat(1))) {}
  /// Cancels the gcd and normalizes the sign and scale of q.
  RationalFn(const BiPoly& p, const BiPoly& q);

  const BiPoly& p() const { return p_; }
  const BiPoly& q() const { return q_; }

  bool is_constant() const { return p_.is_constant() && q_.is_constant(); }
  bool is_polynomial() const { return q_.is_constant(); }

  /// p - c q, the closure of the level set f = c.
  BiPoly level_curve(const Rat& c) const { return p_ - c * q_; }

  /// Value at a point of dom(f); q(x, y) = 0 gives infinity (inf).
  long double eval(long double x, long double y) const;

  /// Parsable text, e.g. "(x)/(y)" or "x + y" when q = 1.
  std::string to_string() const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  BiPoly p_, q_;
};

RationalFn parse_rational_fn(std::string_view text);

/// Family file: one function per line, '#' starts a comment, blank lines
/// are ignored. Syntax errors report the byte offset within the file.
std::vector<RationalFn> parse_family(std::string_view text);

struct IndeterminacySet {
  /// Common real zeros of p and q; irrational coordinates are balls whose
  /// radius bounds the isolating box.
  std::vector<Point> points;
  /// The corner (inf, inf) of the torus is always treated as singular.
  bool infinity_convention = true;
};

IndeterminacySet indeterminacy_points(const RationalFn& f, int precision_bits = kDefaultPrecision);

enum class ChartFlip { None, X, Y, XY };

ChartFlip parse_chart_flip(std::string_view s);
std::string to_string(ChartFlip c);

/// f composed with (x, y) -> (1/x, y), (x, 1/y) or (1/x, 1/y).
RationalFn flip_chart(const RationalFn& f, ChartFlip c);

}  // namespace graphoid
