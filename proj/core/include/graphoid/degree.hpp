#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/graphoid.hpp"

namespace graphoid {

using Rng = std::mt19937_64;

/// Sampled map from a circle (angles) to the projective circle (turns).
struct SampledCircleMap {
  std::vector<double> domain;
  /// Turns in [0, 1).
  std::vector<double> values;
  /// Unwrapped values; lift[0] = values[0].
  std::vector<double> lift;
  /// Maximal cyclic index runs on which the lift is monotone.
  std::vector<std::pair<std::size_t, std::size_t>> monotone_pieces;

  std::size_t size() const { return values.size(); }
};

inline constexpr double kMaxLiftJump = 0.25;

/// Throws UnderSampled if two neighbors (cyclically) differ by more than a
/// quarter turn.
SampledCircleMap make_circle_map(std::vector<double> domain, std::vector<double> turns);
/// Coordinate k of the sampled boundary map in the circle chart.
SampledCircleMap circle_map(const BoundaryMapSamples& s, std::size_t k);
/// Direction of the boundary point seen from the center, (x, y)/|(x, y)|.
SampledCircleMap radial_map(const BoundaryMapSamples& s);

struct ParityReport {
  double regular_value = 0;
  long preimage_count = 0;
  bool odd = false;
  bool z2_trivial = true;
};

/// Transversal preimages of a regular value. Without a supplied value one
/// is drawn uniformly, rejecting values within 2/n of a local extremum of
/// the lift or of a sample (32 tries).
ParityReport z2_degree(const SampledCircleMap& m, std::optional<double> regular_value, Rng& rng);

/// Total lifted displacement in turns; throws NonIntegralWinding when it is
/// not within 0.01 of an integer.
long winding_degree(const SampledCircleMap& m);

struct InnerCircle {
  Point center;
  Rat radius;
  ParityReport parity;
  long winding = 0;
};

struct AdditivityReport {
  Point center;
  Rat radius;
  std::size_t coordinate = 0;
  ParityReport outer;
  long outer_winding = 0;
  std::vector<InnerCircle> inner;
  bool inner_xor = false;
  bool consistent = false;
};

/// Parity of coordinate k of F on the square around center versus the
/// parities on small squares around the singular points inside it.
AdditivityReport additivity_check(const Family& F, const Point& center, const Rat& radius, std::size_t coordinate, Rng& rng,
                                  std::size_t n = 4096);

/// Crossings of a generic level by lambda o mu along the segments of a
/// coherence class; lambda has random weights in [1, 2] chosen to separate
/// the segment end images (32 tries).
ParityReport parity_probe(const BoundaryMapSamples& s, const CoherenceClass& cls, Rng& rng,
                          std::optional<double> level = std::nullopt);

struct ObstructionReport {
  bool applies = false;
  long radial_winding = 0;
  bool radial_odd = false;
  bool inner_odd = false;
  bool obstruction = false;
  AdditivityReport additivity;
  std::string verdict;
};

/// The radial map around the singular points has odd degree while the inner
/// parities of F are even: no Z2-trivial extension exists.
ObstructionReport obstruction_report(const Family& F, const Point& center, const Rat& radius, std::size_t coordinate,
                                     Rng& rng, std::size_t n = 4096);

struct MobiusReport {
  bool ok = false;
  Point center;
  double max_antipodal = 0;
  long winding = 0;
};

/// f = (x - a)/(y - b): antipodal boundary points have equal values and the
/// boundary map winds twice. Throws WrongShape for any other f.
MobiusReport mobius_check(const RationalFn& f, const Rat& radius, std::size_t n = 1024);
/// Center of a function of the shape (x - a)/(y - b).
Point mobius_center(const RationalFn& f);

}  // namespace graphoid
