#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphoid/algebra/coef.hpp"

namespace graphoid {

/// A point of the projective line R u {inf}.
class ProjValue {
 public:
  ProjValue() = default;
  ProjValue(const Coef& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  ProjValue(const Rat& v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  static ProjValue infinity() {
    ProjValue p;
    p.inf_ = true;
    return p;
  }
  /// +-inf and nan-free doubles; either infinity maps to the single point.
  static ProjValue from_double(double v, int precision_bits = kDefaultPrecision);

  bool is_infinite() const { return inf_; }
  bool is_exact() const { return inf_ || v_.is_exact(); }
  const Coef& value() const { return v_; }
  /// +inf for the point at infinity.
  double to_double() const;
  /// Position on the circle model, in turns: atan(x)/pi mod 1.
  double turn() const;
  /// "inf" or a decimal string.
  std::string to_string(int digits = 17) const;

  friend bool operator==(const ProjValue& a, const ProjValue& b);

 private:
  Coef v_;
  bool inf_ = false;
};

/// Circle chart: x = tan(pi u) for u in [0, 1); u = 1/2 is infinity.
double to_turn(double x);
double from_turn(double u);
/// Signed distance from a to b along the circle, in turns, in [-1/2, 1/2).
double turn_delta(double a, double b);

/// 2|a - b| / (sqrt(1 + a^2) sqrt(1 + b^2)); infinity is a single point.
double chordal_dist(double a, double b);
double chordal_dist(const ProjValue& a, const ProjValue& b);

/// The four closed arcs between consecutive points of {0, 1, inf, -1}, in
/// counterclockwise order: [0,1], (1,inf], (inf,-1), [-1,0).
enum class Segment { ZeroOne = 0, OneInf = 1, InfMinusOne = 2, MinusOneZero = 3 };

std::string to_string(Segment s);
/// The half-open segment containing x (the notation above).
Segment segment_of(double x);
Segment segment_of(const ProjValue& x);
/// Whether x lies in the closure of s.
bool in_closure(double x, Segment s);

/// The chart mu of the segment closure onto [0, 1]: x, x + 1, 1 - 1/x, -1/x.
double segment_chart(double x, Segment s);
/// Exact when x is; infinity maps to 1 on (1,inf] and to 0 on (inf,-1).
Coef segment_chart(const ProjValue& x, Segment s);

/// Finite net of the projective line: the points at turns k / (4 * 2^level),
/// which include {0, 1, inf, -1} and form a 2^-level net in the chordal
/// metric. Nets are nested.
struct Net {
  int level = 0;

  std::size_t size() const { return std::size_t{4} << level; }
  /// Turn of the k-th point.
  double turn(std::size_t k) const { return static_cast<double>(k) / static_cast<double>(size()); }
  double value(std::size_t k) const { return from_turn(turn(k)); }
  /// Index k of the open cell (turn(k), turn(k+1)) containing x; points of
  /// the net belong to the cell that starts there.
  std::size_t cell(double x) const;
  /// True when x is within `slack` turns of a net point.
  bool on_net(double x, double slack = 1e-12) const;
  /// Largest chordal distance from a point of the line to the net.
  double covering_radius() const;
};

Net build_net(int level);

/// Consecutive pairs, by index, of points given as turns on a circle, in
/// counterclockwise order starting from the smallest turn.
std::vector<std::pair<std::size_t, std::size_t>> neighbor_pairs(const std::vector<double>& turns);
std::vector<std::pair<std::size_t, std::size_t>> neighbor_pairs(const std::vector<ProjValue>& points);

}  // namespace graphoid
