#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/algebra/bipoly.hpp"
#include "graphoid/algebra/coef.hpp"
#include "graphoid/algebra/point.hpp"
#include "graphoid/algebra/unipoly.hpp"

namespace graphoid {

enum class Direction { E = 0, N = 1, W = 2, S = 3 };

std::string to_string(Direction d);

/// Dense bivariate polynomial with exact-or-ball coefficients.
class CoefPoly {
 public:
  CoefPoly() = default;
  static CoefPoly from(const BiPoly& p);

  int deg_x() const { return static_cast<int>(a_.size()) - 1; }
  int deg_y() const;
  const Coef& at(int i, int j) const;
  void set(int i, int j, Coef c);
  /// Coefficient not certified to be zero is treated as present.
  bool present(int i, int j) const { return !at(i, j).is_zero(); }
  bool is_zero() const;

  /// p(x + a, y + b)
  CoefPoly translate(const Coef& a, const Coef& b) const;
  /// p(R^r(x, y)) with R(x, y) = (-y, x).
  CoefPoly rotate(int r) const;
  /// Divides by the largest power of x dividing every present term.
  CoefPoly strip_x(int* power = nullptr) const;
  /// Divides by the largest power of y dividing every present term.
  CoefPoly strip_y(int* power = nullptr) const;

  Coef eval(const Coef& x, const Coef& y) const;
  long double eval(long double x, long double y) const;

 private:
  std::vector<std::vector<Coef>> a_;  // a_[i][j]: x^i y^j
};

/// Truncated power series; index = exponent.
using Series = std::vector<Coef>;

/// One lower-hull edge of the Newton polygon with negative slope.
struct NewtonEdge {
  Rat slope;           // -1/gamma where y ~ x^gamma along the edge
  UniPoly edge_poly;   // sum over edge terms a_ij c^(j - j_min)
  int j_min = 0, j_max = 0;
};

/// Requires p(0,0) = 0; x and y factors common to all terms are ignored.
std::vector<NewtonEdge> newton_polygon(const BiPoly& p);

namespace detail {
struct Continuation;
}

/// One real branch of a curve at a center. In its own frame the branch is
/// {(t^m, psi(t)) : 0 < t <= radius^(1/m)}; the frame is rotated back to
/// the plane by R^frame, and the direction names the triangle it lies in.
struct PuiseuxBranch {
  int id = 0;
  Direction direction = Direction::E;
  int frame = 0;
  int m = 1;
  /// psi[k] is the coefficient of t^k; valid for all k < psi.size().
  Series psi;
  /// The series is the full (finite) expansion.
  bool exact = false;
  /// Largest coefficient error radius (0 when exact).
  double tail_bound = 0.0;
  Rat radius;
  int conj_id = -1;
  /// +1 when this branch is the t > 0 half of the pair's shared
  /// parametrization, -1 when it is the t < 0 half.
  int sign_chart = 1;
  Point center;
  /// Squarefree curve the branch belongs to (untranslated).
  BiPoly curve;
  /// Original (translated, rotated) curve in this branch's frame.
  std::shared_ptr<const CoefPoly> frame_curve;
  std::shared_ptr<detail::Continuation> continuation;

  /// psi(t) as a double (t > 0).
  long double psi_at(long double t) const;
  /// Offset from the center of the branch point with parameter t > 0.
  std::pair<long double, long double> offset_at(long double t) const;
  /// Leading nonzero term index of psi, or -1 when psi vanishes identically.
  int valuation() const;
  /// Recomputes psi up to t-degree order * m when a continuation exists.
  void extend(int order);
};

struct BranchSet {
  Point center;
  Rat radius;
  std::vector<PuiseuxBranch> branches;
  BiPoly curve;
  int order = 12;

  const PuiseuxBranch& by_id(int id) const;
  const PuiseuxBranch& conjugate_of(const PuiseuxBranch& b) const;
};

const PuiseuxBranch& conjugate_of(const BranchSet& set, const PuiseuxBranch& b);

inline constexpr int kDefaultOrder = 12;
inline constexpr int kMaxDepth = 16;

/// All real branches of p at center. The squarefree part of p is used.
BranchSet expand_branches(const BiPoly& p, const Point& center = Point::origin(), int order = kDefaultOrder,
                          int precision_bits = kDefaultPrecision);

/// Radius inside which the branch structure of the curves at center is
/// stable; at most 1/2, a dyadic rational.
Rat a_small_radius(const std::vector<BiPoly>& curves, const Point& center = Point::origin());

/// True when no critical point of the curves (other than the center) lies
/// in the open square of the given radius; no cap is applied.
bool is_a_small(const std::vector<BiPoly>& curves, const Rat& radius, const Point& center = Point::origin());

/// Translates a rational polynomial to a (possibly inexact) center.
CoefPoly translate_to(const BiPoly& p, const Point& center);

/// Series helpers.
Series series_mul(const Series& a, const Series& b, std::size_t n);
Series series_pow(const Series& a, unsigned e, std::size_t n);
/// p(t^m, s(t)) truncated to n terms.
Series compose(const CoefPoly& p, int m, const Series& s, std::size_t n);

}  // namespace graphoid
