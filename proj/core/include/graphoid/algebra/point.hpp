#pragma once

#include <string>

#include "graphoid/algebra/coef.hpp"

namespace graphoid {

/// A point of the plane with exact or certified-ball coordinates.
struct Point {
  Coef x;
  Coef y;

  bool is_exact() const { return x.is_exact() && y.is_exact(); }
  static Point origin() { return {Coef(), Coef()}; }
};

/// Rational point nearest to the ball midpoints (exact points unchanged).
inline std::pair<Rat, Rat> rational_center(const Point& p) {
  auto mid = [](const Coef& c) { return c.is_exact() ? c.exact() : c.ball().mid_rat(); };
  return {mid(p.x), mid(p.y)};
}

}  // namespace graphoid
