#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/algebra/point.hpp"
#include "graphoid/projective.hpp"
#include "graphoid/puiseux.hpp"
#include "graphoid/rf_parser.hpp"

namespace graphoid {

struct Family {
  std::vector<RationalFn> members;

  std::size_t size() const { return members.size(); }
  /// Union of the members' indeterminacy points, deduplicated.
  std::vector<Point> singular_points(int precision_bits = kDefaultPrecision) const;
  /// Closures of the level sets f = 0, inf, 1, -1 of every member.
  std::vector<BiPoly> level_curves() const;
  /// z lies in dom(F).
  bool is_regular(const Point& z) const;
  /// F(z) for z in dom(F); exact when z is.
  std::vector<ProjValue> value_at(const Point& z) const;
  /// F at a plane point in long double; infinity as +inf.
  std::vector<double> eval(long double x, long double y) const;
};

/// Offset of the unit square boundary point at arc-length angle theta:
/// theta = 0 is (1, 0) and the boundary is traversed counterclockwise.
std::pair<long double, long double> square_offset(long double theta);

struct Anchor {
  double theta = 0;
  Point point;
};

/// Boundary points of the square of the given radius around center cut out
/// by the level sets f = 0, inf, 1, -1, by f_x = 0 on horizontal sides and
/// f_y = 0 on vertical sides, plus the four vertices (where the diagonals
/// meet the boundary). Sorted by theta.
std::vector<Anchor> b0_anchors(const Family& F, const Point& center, const Rat& radius);

struct BoundaryMapSamples {
  Point center;
  Rat radius;
  std::vector<double> thetas;
  /// values[i][k]: member k at thetas[i]; infinity as +inf.
  std::vector<std::vector<double>> values;
  /// Indices of anchor samples, increasing.
  std::vector<std::size_t> marks;

  std::size_t size() const { return thetas.size(); }
  Segment segment(std::size_t i, std::size_t k) const { return segment_of(values[i][k]); }
};

inline constexpr double kMaxTurnJump = 1.0 / 32.0;

/// n equally spaced angles plus the anchors (when requested), refined until
/// no coordinate moves more than kMaxTurnJump between neighbors.
BoundaryMapSamples sample_boundary_map(const Family& F, const Point& center, const Rat& radius, std::size_t n,
                                       bool with_anchors = true);

/// A run of samples [begin, end] along the boundary; end < begin wraps.
struct SampleSegment {
  std::size_t begin = 0, end = 0;
};

/// Segments between consecutive marks, cyclically.
std::vector<SampleSegment> mark_segments(const BoundaryMapSamples& s);
/// Sample indices of the segment in boundary order.
std::vector<std::size_t> segment_indices(const BoundaryMapSamples& s, SampleSegment seg);

struct MonotoneReport {
  bool ok = true;
  std::size_t segments = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

/// Per coordinate, values between consecutive marks stay in one canonical
/// segment closure and are monotone, both up to one cell of the net of the
/// given level.
MonotoneReport check_monotone(const BoundaryMapSamples& s, int net_level = 10);

struct FiberArc {
  std::vector<std::vector<double>> samples;
  std::size_t begin_mark = 0, end_mark = 0;
};

struct FiberAnchor {
  std::vector<ProjValue> values;
  std::size_t member = 0;
  ProjValue level;
  int branch_id = 0;
  Direction direction = Direction::E;
};

struct Fiber {
  bool singular = false;
  std::vector<FiberArc> arcs;
  std::vector<std::vector<ProjValue>> points;
  std::vector<FiberAnchor> anchors;
  /// Chordal sup-metric Hausdorff distance between the last two radii.
  double hausdorff = 0;
  Rat radius;
  int refinements = 0;
  /// Samples at the final radius (empty at regular points).
  BoundaryMapSamples samples;
};

/// Cluster set of F at z. Regular points give the singleton F(z).
Fiber fiber(const Family& F, const Point& z, double tol, int order = kDefaultOrder);

/// Chordal sup-metric distance from a tuple to the closed polyline through
/// the samples (linear interpolation in the circle chart).
double distance_to_samples(const std::vector<double>& tuple, const BoundaryMapSamples& s);
/// Symmetric Hausdorff distance between two sampled boundary images.
double hausdorff_distance(const BoundaryMapSamples& a, const BoundaryMapSamples& b);

struct CoherenceSignature {
  std::vector<std::size_t> less, equal, greater;
  std::vector<std::size_t> cube;
  int level = 0;

  /// Signature of the reversed segment.
  CoherenceSignature flipped() const;
  friend bool operator==(const CoherenceSignature& a, const CoherenceSignature& b) = default;
};

/// Members continuous at the center are pinned to their value there. Inserts
/// the points where some other coordinate meets a point of the net of the
/// given level, and marks them, so that every segment between marks stays
/// inside one net cell per coordinate.
BoundaryMapSamples refine_at_net(const Family& F, const BoundaryMapSamples& s, int level);

/// Partition of F by comparing the segment's end values inside the net cell
/// each coordinate occupies. less: f(begin) < f(end).
CoherenceSignature coherence_signature(const BoundaryMapSamples& s, SampleSegment seg, int level);

struct CoherenceClass {
  CoherenceSignature signature;
  std::vector<SampleSegment> segments;
  /// Segment is taken in reverse to match the signature.
  std::vector<bool> reversed;
};

/// Mark segments of refine_at_net(F, s, level) grouped by coherence; the
/// samples used are returned through refined.
std::vector<CoherenceClass> coherence_classes(const Family& F, const BoundaryMapSamples& s, int level,
                                              BoundaryMapSamples* refined);

}  // namespace graphoid
