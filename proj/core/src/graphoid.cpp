#include "graphoid/graphoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "graphoid/algebra/roots.hpp"
#include "graphoid/error.hpp"
#include "graphoid/limits.hpp"

namespace graphoid {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long double kPi = std::numbers::pi_v<long double>;

bool same_point(const Point& a, const Point& b) {
  if (a.is_exact() && b.is_exact()) return a.x.exact() == b.x.exact() && a.y.exact() == b.y.exact();
  return compatible(a.x, b.x) && compatible(a.y, b.y);
}

ProjValue value_of(const RationalFn& f, const Point& z) {
  Coef p = f.p().eval(z.x, z.y), q = f.q().eval(z.x, z.y);
  if (q.is_zero()) {
    if (p.is_zero()) throw Error(Errc::DegenerateInput, "point is not in the domain of " + f.to_string());
    return ProjValue::infinity();
  }
  return ProjValue(p / q);
}

// Sup-norm distance from the center to a point, as a ball or exact value.
Coef sup_dist(const Point& center, const Point& p) {
  Coef dx = (p.x - center.x).abs(), dy = (p.y - center.y).abs();
  if (dx.is_exact() && dy.is_exact()) return Coef(std::max(dx.exact(), dy.exact()));
  return dx.to_double() >= dy.to_double() ? dx : dy;
}

// Evaluates the members in offset coordinates around a rational center, so
// that tiny radii do not cancel.
class Evaluator {
 public:
  Evaluator(const Family& F, const Point& center, const Rat& radius) : radius_(radius) {
    auto [cx, cy] = rational_center(center);
    cx_ = cx;
    cy_ = cy;
    r_ = radius.get_d();
    for (const RationalFn& f : F.members) {
      members_.push_back({flatten(f.p().translate(cx, cy)), flatten(f.q().translate(cx, cy))});
      exact_.push_back({f.p().translate(cx, cy), f.q().translate(cx, cy)});
    }
  }

  std::size_t size() const { return members_.size(); }

  std::vector<double> at(long double theta) const {
    auto [ox, oy] = square_offset(theta);
    long double X = r_ * ox, Y = r_ * oy;
    std::vector<double> v;
    v.reserve(members_.size());
    for (const auto& [p, q] : members_) {
      long double num = eval(p, X, Y), den = eval(q, X, Y);
      v.push_back(den == 0 ? kInf : static_cast<double>(num / den));
    }
    return v;
  }

  // Exact evaluation at offset radius * (ox, oy).
  std::vector<double> at_exact(const Rat& ox, const Rat& oy) const {
    Rat X = radius_ * ox, Y = radius_ * oy;
    std::vector<double> v;
    for (const auto& [p, q] : exact_) {
      Rat num = p.eval(X, Y), den = q.eval(X, Y);
      v.push_back(sgn(den) == 0 ? kInf : Rat(num / den).get_d());
    }
    return v;
  }

 private:
  struct Term {
    int i, j;
    long double c;
  };
  using Flat = std::vector<Term>;

  static Flat flatten(const BiPoly& p) {
    Flat f;
    for (const auto& [m, c] : p.terms()) f.push_back({m.i, m.j, static_cast<long double>(c.get_d())});
    return f;
  }

  static long double eval(const Flat& f, long double x, long double y) {
    long double s = 0;
    for (const Term& t : f) {
      long double v = t.c;
      for (int k = 0; k < t.i; ++k) v *= x;
      for (int k = 0; k < t.j; ++k) v *= y;
      s += v;
    }
    return s;
  }

  Rat radius_;
  Rat cx_, cy_;
  long double r_;
  std::vector<std::pair<Flat, Flat>> members_;
  std::vector<std::pair<BiPoly, BiPoly>> exact_;
};

double max_jump(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::fabs(turn_delta(to_turn(a[k]), to_turn(b[k]))));
  return m;
}

struct Sample {
  double theta;
  std::vector<double> v;
  bool mark;
};

void refine_between(const Evaluator& ev, const Sample& a, const Sample& b, std::vector<Sample>& out, int depth) {
  if (depth > 40 || b.theta - a.theta < 1e-13 || max_jump(a.v, b.v) <= kMaxTurnJump) return;
  double mid = 0.5 * (a.theta + b.theta);
  Sample m{mid, ev.at(mid), false};
  refine_between(ev, a, m, out, depth + 1);
  out.push_back(m);
  refine_between(ev, m, b, out, depth + 1);
}

BoundaryMapSamples assemble(const Point& center, const Rat& radius, const Evaluator& ev, std::vector<Sample> pts) {
  std::sort(pts.begin(), pts.end(), [](const Sample& a, const Sample& b) { return a.theta < b.theta; });
  std::vector<Sample> merged;
  for (Sample& s : pts) {
    if (!merged.empty() && s.theta - merged.back().theta < 1e-12) {
      if (s.mark) merged.back() = std::move(s);
      continue;
    }
    merged.push_back(std::move(s));
  }
  std::vector<Sample> full;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    full.push_back(merged[i]);
    Sample next = merged[(i + 1) % merged.size()];
    if (i + 1 == merged.size()) next.theta += two_pi;
    std::vector<Sample> mid;
    refine_between(ev, merged[i], next, mid, 0);
    for (Sample& m : mid) {
      if (m.theta >= two_pi) m.theta -= two_pi;
      full.push_back(std::move(m));
    }
  }
  std::sort(full.begin(), full.end(), [](const Sample& a, const Sample& b) { return a.theta < b.theta; });
  BoundaryMapSamples out;
  out.center = center;
  out.radius = radius;
  for (Sample& s : full) {
    if (s.mark) out.marks.push_back(out.thetas.size());
    out.thetas.push_back(s.theta);
    out.values.push_back(std::move(s.v));
  }
  return out;
}

void check_boundary_clear(const Family& F, const Point& center, const Rat& radius) {
  for (const Point& s : F.singular_points()) {
    Coef d = sup_dist(center, s);
    bool hit = d.is_exact() ? d.exact() == radius : compatible(d, Coef(radius));
    if (hit) throw Error(Errc::SingularOnBoundary, "a singular point lies on the sampling square");
  }
}

}  // namespace

// ---------------------------------------------------------------- Family

std::vector<Point> Family::singular_points(int precision_bits) const {
  std::vector<Point> out;
  for (const RationalFn& f : members) {
    if (f.is_constant()) continue;
    for (const Point& p : indeterminacy_points(f, precision_bits).points) {
      bool dup = std::any_of(out.begin(), out.end(), [&](const Point& q) { return same_point(p, q); });
      if (!dup) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
    auto [ax, ay] = rational_center(a);
    auto [bx, by] = rational_center(b);
    return ax != bx ? ax < bx : ay < by;
  });
  return out;
}

std::vector<BiPoly> Family::level_curves() const {
  std::vector<BiPoly> out;
  for (const RationalFn& f : members)
    for (const BiPoly& c : {f.p(), f.q(), f.p() - f.q(), f.p() + f.q()})
      if (!c.is_zero() && !c.is_constant()) out.push_back(c);
  return out;
}

bool Family::is_regular(const Point& z) const {
  for (const RationalFn& f : members)
    if (f.p().eval(z.x, z.y).is_zero() && f.q().eval(z.x, z.y).is_zero()) return false;
  return true;
}

std::vector<ProjValue> Family::value_at(const Point& z) const {
  std::vector<ProjValue> v;
  for (const RationalFn& f : members) v.push_back(value_of(f, z));
  return v;
}

std::vector<double> Family::eval(long double x, long double y) const {
  std::vector<double> v;
  for (const RationalFn& f : members) v.push_back(static_cast<double>(f.eval(x, y)));
  return v;
}

// ---------------------------------------------------------------- boundary

std::pair<long double, long double> square_offset(long double theta) {
  long double s = theta * 4 / kPi;
  s -= 8 * std::floor(s / 8);
  if (s < 1) return {1, s};
  if (s < 3) return {2 - s, 1};
  if (s < 5) return {-1, 4 - s};
  if (s < 7) return {s - 6, -1};
  return {1, s - 8};
}

namespace {

// s-parameter (8 per turn) of the point with free offset tau on a side
double side_s(int side, double tau) {
  switch (side) {
    case 0: return tau >= 0 ? tau : 8 + tau;  // east, tau = y
    case 1: return 2 - tau;                   // north, tau = x
    case 2: return 4 - tau;                   // west, tau = y
    default: return 6 + tau;                  // south, tau = x
  }
}

Point side_point(const Point& center, const Rat& r, int side, const Coef& tau) {
  Coef R(r);
  switch (side) {
    case 0: return {center.x + R, center.y + R * tau};
    case 1: return {center.x + R * tau, center.y + R};
    case 2: return {center.x - R, center.y + R * tau};
    default: return {center.x + R * tau, center.y - R};
  }
}

}  // namespace

std::vector<Anchor> b0_anchors(const Family& F, const Point& center, const Rat& radius) {
  if (radius <= 0) throw Error(Errc::DegenerateInput, "radius must be positive");
  if (!is_a_small(F.level_curves(), radius, center))
    throw Error(Errc::RadiusNotSmall, "radius " + radius.get_str() + " is not A-small at the center");
  auto [cx, cy] = rational_center(center);
  Point c{Coef(cx), Coef(cy)};
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Anchor> out;
  for (int side = 0; side < 4; ++side) {
    for (int t : {-1, 1}) {
      Anchor a;
      a.theta = side_s(side, t) * two_pi / 8.0;
      if (a.theta >= two_pi) a.theta -= two_pi;
      a.point = side_point(c, radius, side, Coef(static_cast<long>(t)));
      out.push_back(a);
    }
  }
  for (const RationalFn& f : F.members) {
    const BiPoly &p = f.p(), &q = f.q();
    BiPoly fx = p.dx() * q - p * q.dx(), fy = p.dy() * q - p * q.dy();
    for (int side = 0; side < 4; ++side) {
      bool vertical = side % 2 == 0;
      std::vector<BiPoly> polys{p, q, p - q, p + q, vertical ? fy : fx};
      for (const BiPoly& P : polys) {
        if (P.is_zero() || P.is_constant()) continue;
        UniPoly u;
        switch (side) {
          case 0: u = P.restrict_line(cx + radius, cy, Rat(0), radius); break;
          case 1: u = P.restrict_line(cx, cy + radius, radius, Rat(0)); break;
          case 2: u = P.restrict_line(cx - radius, cy, Rat(0), radius); break;
          default: u = P.restrict_line(cx, cy - radius, radius, Rat(0)); break;
        }
        if (u.is_zero() || u.is_constant()) continue;
        for (const RealRoot& root : real_roots_in(u, Rat(-1), Rat(1))) {
          Anchor a;
          a.theta = side_s(side, root.value.to_double()) * two_pi / 8.0;
          if (a.theta >= two_pi) a.theta -= two_pi;
          a.point = side_point(c, radius, side, root.coef());
          out.push_back(a);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Anchor& a, const Anchor& b) { return a.theta < b.theta; });
  std::vector<Anchor> dedup;
  for (Anchor& a : out) {
    if (!dedup.empty() && a.theta - dedup.back().theta < 1e-12) continue;
    dedup.push_back(std::move(a));
  }
  if (dedup.size() > 1 && dedup.back().theta - dedup.front().theta > two_pi - 1e-12) dedup.pop_back();
  return dedup;
}

BoundaryMapSamples sample_boundary_map(const Family& F, const Point& center, const Rat& radius, std::size_t n,
                                       bool with_anchors) {
  if (n < 64) throw Error(Errc::DegenerateInput, "at least 64 samples are required");
  if (radius <= 0) throw Error(Errc::DegenerateInput, "radius must be positive");
  check_boundary_clear(F, center, radius);
  Evaluator ev(F, center, radius);
  std::vector<Sample> pts;
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < n; ++k) {
    double th = two_pi * static_cast<double>(k) / static_cast<double>(n);
    pts.push_back({th, ev.at(th), false});
  }
  if (with_anchors) {
    auto [cx, cy] = rational_center(center);
    for (const Anchor& a : b0_anchors(F, center, radius)) {
      Sample s{a.theta, {}, true};
      if (a.point.is_exact())
        s.v = ev.at_exact(Rat((a.point.x.exact() - cx) / radius), Rat((a.point.y.exact() - cy) / radius));
      else
        s.v = ev.at(a.theta);
      pts.push_back(std::move(s));
    }
  }
  return assemble(center, radius, ev, std::move(pts));
}

std::vector<SampleSegment> mark_segments(const BoundaryMapSamples& s) {
  std::vector<SampleSegment> out;
  const auto& m = s.marks;
  for (std::size_t k = 0; k < m.size(); ++k) out.push_back({m[k], m[(k + 1) % m.size()]});
  return out;
}

std::vector<std::size_t> segment_indices(const BoundaryMapSamples& s, SampleSegment seg) {
  std::vector<std::size_t> idx;
  std::size_t n = s.size();
  for (std::size_t i = seg.begin;; i = (i + 1) % n) {
    idx.push_back(i);
    if (i == seg.end && idx.size() > 1) break;
    if (idx.size() > n + 1) break;
  }
  return idx;
}

namespace {

bool in_arc(double u, int seg, double slack) {
  double d = u - 0.25 * seg;
  d -= std::floor(d);
  return d <= 0.25 + slack || d >= 1.0 - slack;
}

}  // namespace

MonotoneReport check_monotone(const BoundaryMapSamples& s, int net_level) {
  MonotoneReport rep;
  const double cell = 1.0 / static_cast<double>(build_net(net_level).size());
  for (SampleSegment seg : mark_segments(s)) {
    ++rep.segments;
    std::vector<std::size_t> idx = segment_indices(s, seg);
    for (std::size_t k = 0; k < s.values.front().size(); ++k) {
      std::vector<double> u;
      for (std::size_t i : idx) u.push_back(to_turn(s.values[i][k]));
      bool confined = false;
      for (int a = 0; a < 4 && !confined; ++a)
        confined = std::all_of(u.begin(), u.end(), [&](double v) { return in_arc(v, a, cell); });
      double hi = 0, lo = 0;
      bool up = true, down = true;
      for (double v : u) {
        double rel = turn_delta(u.front(), v);
        if (rel < hi - cell) up = false;
        if (rel > lo + cell) down = false;
        hi = std::max(hi, rel);
        lo = std::min(lo, rel);
      }
      if (!confined || !(up || down)) {
        ++rep.violations;
        rep.ok = false;
        if (rep.first_violation.empty())
          rep.first_violation = "member " + std::to_string(k) + " between theta " + std::to_string(s.thetas[seg.begin]) +
                                " and " + std::to_string(s.thetas[seg.end]) + (confined ? ": not monotone" : ": leaves its segment");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- Hausdorff

namespace {

using Turns = std::vector<double>;

Turns turns_of(const std::vector<double>& v) {
  Turns t;
  t.reserve(v.size());
  for (double x : v) t.push_back(to_turn(x));
  return t;
}

// Sup-metric turn distance from a to the segment b0 -> b1 (short way round).
double seg_dist(const Turns& a, const Turns& b0, const Turns& b1) {
  const std::size_t K = a.size();
  std::vector<double> e(K), d(K);
  for (std::size_t k = 0; k < K; ++k) {
    e[k] = turn_delta(b0[k], a[k]);
    d[k] = turn_delta(b0[k], b1[k]);
  }
  auto value = [&](double s) {
    double m = 0;
    for (std::size_t k = 0; k < K; ++k) m = std::max(m, std::fabs(e[k] - s * d[k]));
    return m;
  };
  double best = std::min(value(0), value(1));
  auto consider = [&](double num, double den) {
    if (den == 0) return;
    double s = num / den;
    if (s > 0 && s < 1) best = std::min(best, value(s));
  };
  for (std::size_t k = 0; k < K; ++k) {
    consider(e[k], d[k]);
    for (std::size_t l = k + 1; l < K; ++l) {
      consider(e[k] - e[l], d[k] - d[l]);
      consider(e[k] + e[l], d[k] + d[l]);
    }
  }
  return best;
}

// Bounding-volume tree over the polyline segments. Boxes are products of
// arcs [lo, hi] of the turn circle with hi - lo <= 1.
class PolylineIndex {
 public:
  explicit PolylineIndex(const BoundaryMapSamples& s) {
    for (const auto& v : s.values) pts_.push_back(turns_of(v));
    const std::size_t n = pts_.size();
    K_ = n ? pts_[0].size() : 0;
    std::vector<std::size_t> ids(n);
    boxes_.resize(n * K_ * 2);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = i;
      const Turns& a = pts_[i];
      const Turns& b = pts_[(i + 1) % n];
      for (std::size_t k = 0; k < K_; ++k) {
        double d = turn_delta(a[k], b[k]);
        double lo = d < 0 ? a[k] + d : a[k];
        lo -= std::floor(lo);
        boxes_[(i * K_ + k) * 2] = lo;
        boxes_[(i * K_ + k) * 2 + 1] = lo + std::fabs(d);
      }
    }
    if (n) build(ids, 0, n);
  }

  // Turn distance to the polyline.
  double query(const Turns& a) const {
    double best = std::numeric_limits<double>::infinity();
    if (!nodes_.empty()) search(0, a, best);
    return best;
  }

  const std::vector<Turns>& points() const { return pts_; }

 private:
  struct Node {
    std::vector<double> box;  // lo, hi per coordinate
    std::size_t left = 0, right = 0;  // children, or 0 at leaves
    std::vector<std::size_t> segs;
  };
  static constexpr std::size_t kLeaf = 8;

  static double arc_dist(double u, double lo, double hi) {
    if (hi - lo >= 1) return 0;
    double v = u - lo;
    v -= std::floor(v);
    if (v <= hi - lo) return 0;
    return std::min(v - (hi - lo), 1 - v);
  }

  double box_dist(const std::vector<double>& box, const Turns& a) const {
    double d = 0;
    for (std::size_t k = 0; k < K_; ++k) d = std::max(d, arc_dist(a[k], box[2 * k], box[2 * k + 1]));
    return d;
  }

  std::size_t build(std::vector<std::size_t>& ids, std::size_t begin, std::size_t end) {
    std::size_t at = nodes_.size();
    nodes_.push_back({});
    std::vector<double> box(2 * K_);
    for (std::size_t k = 0; k < K_; ++k) {
      // union of arcs, anchored at the first one
      double base = boxes_[(ids[begin] * K_ + k) * 2], lo = 0, hi = 0;
      for (std::size_t t = begin; t < end; ++t) {
        double l = boxes_[(ids[t] * K_ + k) * 2] - base, h = boxes_[(ids[t] * K_ + k) * 2 + 1] - base;
        double shift = std::round(l);
        if (l - shift < -0.5) shift -= 1;
        l -= shift;
        h -= shift;
        lo = std::min(lo, l);
        hi = std::max(hi, h);
      }
      box[2 * k] = base + lo;
      box[2 * k + 1] = base + hi;
    }
    nodes_[at].box = box;
    if (end - begin <= kLeaf) {
      nodes_[at].segs.assign(ids.begin() + static_cast<long>(begin), ids.begin() + static_cast<long>(end));
      return at;
    }
    std::size_t axis = 0;
    for (std::size_t k = 1; k < K_; ++k)
      if (box[2 * k + 1] - box[2 * k] > box[2 * axis + 1] - box[2 * axis]) axis = k;
    const double base = box[2 * axis];
    auto key = [&](std::size_t i) {
      double c = 0.5 * (boxes_[(i * K_ + axis) * 2] + boxes_[(i * K_ + axis) * 2 + 1]) - base;
      return c - std::floor(c);
    };
    std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(ids.begin() + static_cast<long>(begin), ids.begin() + static_cast<long>(mid),
                     ids.begin() + static_cast<long>(end), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
    std::size_t l = build(ids, begin, mid);
    std::size_t r = build(ids, mid, end);
    nodes_[at].left = l;
    nodes_[at].right = r;
    return at;
  }

  void search(std::size_t node, const Turns& a, double& best) const {
    const Node& nd = nodes_[node];
    if (nd.left == 0 && nd.right == 0) {
      const std::size_t n = pts_.size();
      for (std::size_t i : nd.segs) best = std::min(best, seg_dist(a, pts_[i], pts_[(i + 1) % n]));
      return;
    }
    double dl = box_dist(nodes_[nd.left].box, a), dr = box_dist(nodes_[nd.right].box, a);
    std::size_t first = nd.left, second = nd.right;
    if (dr < dl) {
      std::swap(first, second);
      std::swap(dl, dr);
    }
    if (dl < best) search(first, a, best);
    if (dr < best) search(second, a, best);
  }

  std::size_t K_ = 0;
  std::vector<Turns> pts_;
  std::vector<double> boxes_;
  std::vector<Node> nodes_;
};

double to_chordal(double turn_dist) { return 2.0 * std::sin(std::numbers::pi * std::min(turn_dist, 0.5)); }

double directed(const PolylineIndex& from, const PolylineIndex& to) {
  double h = 0;
  const auto& p = from.points();
  for (std::size_t i = 0; i < p.size(); ++i) {
    h = std::max(h, to.query(p[i]));
    const Turns& b = p[(i + 1) % p.size()];
    Turns mid(p[i].size());
    for (std::size_t k = 0; k < mid.size(); ++k) {
      mid[k] = p[i][k] + 0.5 * turn_delta(p[i][k], b[k]);
      mid[k] -= std::floor(mid[k]);
    }
    h = std::max(h, to.query(mid));
  }
  return h;
}

}  // namespace

double distance_to_samples(const std::vector<double>& tuple, const BoundaryMapSamples& s) {
  PolylineIndex idx(s);
  return to_chordal(idx.query(turns_of(tuple)));
}

double hausdorff_distance(const BoundaryMapSamples& a, const BoundaryMapSamples& b) {
  PolylineIndex ia(a), ib(b);
  return to_chordal(std::max(directed(ia, ib), directed(ib, ia)));
}

// ---------------------------------------------------------------- fiber

namespace {

constexpr std::size_t kMaxFiberSamples = std::size_t{1} << 21;

void refine_flat(const Evaluator& ev, const Sample& a, const Sample& b, double tol, std::vector<Sample>& out, int depth,
                 std::size_t& budget) {
  if (depth > 40 || budget == 0 || b.theta - a.theta < 1e-13) return;
  double mid = 0.5 * (a.theta + b.theta);
  Sample m{mid, ev.at(mid), false};
  if (to_chordal(seg_dist(turns_of(m.v), turns_of(a.v), turns_of(b.v))) <= tol) return;
  --budget;
  refine_flat(ev, a, m, tol, out, depth + 1, budget);
  out.push_back(m);
  refine_flat(ev, m, b, tol, out, depth + 1, budget);
}

// Inserts samples until every midpoint lies within tol of its chord, so the
// polyline follows the boundary image and not only its vertices.
BoundaryMapSamples flatten(const Family& F, const BoundaryMapSamples& s, double tol) {
  Evaluator ev(F, s.center, s.radius);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::size_t> mark_of(s.size(), 0);
  for (std::size_t m : s.marks) mark_of[m] = 1;
  std::vector<Sample> full;
  std::size_t budget = kMaxFiberSamples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Sample a{s.thetas[i], s.values[i], mark_of[i] != 0};
    std::size_t j = (i + 1) % s.size();
    Sample b{s.thetas[j] + (j == 0 ? two_pi : 0.0), s.values[j], false};
    full.push_back(a);
    std::vector<Sample> mid;
    refine_flat(ev, a, b, tol, mid, 0, budget);
    for (Sample& m : mid) {
      if (m.theta >= two_pi) m.theta -= two_pi;
      full.push_back(std::move(m));
    }
  }
  std::sort(full.begin(), full.end(), [](const Sample& a, const Sample& b) { return a.theta < b.theta; });
  BoundaryMapSamples out;
  out.center = s.center;
  out.radius = s.radius;
  for (Sample& p : full) {
    if (p.mark) out.marks.push_back(out.thetas.size());
    out.thetas.push_back(p.theta);
    out.values.push_back(std::move(p.v));
  }
  return out;
}

}  // namespace

Fiber fiber(const Family& F, const Point& z, double tol, int order) {
  if (!(tol > 0)) throw Error(Errc::DegenerateInput, "tolerance must be positive");
  Fiber out;
  if (F.is_regular(z)) {
    out.points.push_back(F.value_at(z));
    return out;
  }
  out.singular = true;
  Rat r0 = a_small_radius(F.level_curves(), z) / 2;
  BoundaryMapSamples prev;
  bool done = false;
  for (int k = 0; k <= 6; ++k) {
    Rat r = r0;
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(2 * k));
    BoundaryMapSamples cur = flatten(F, sample_boundary_map(F, z, r, std::size_t{512} << k), tol / 4);
    out.refinements = k;
    out.radius = r;
    if (k > 0) {
      out.hausdorff = hausdorff_distance(prev, cur);
      if (out.hausdorff < tol) {
        out.samples = std::move(cur);
        done = true;
        break;
      }
    }
    prev = std::move(cur);
  }
  if (!done)
    throw Error(Errc::NoConvergence, "Hausdorff distance " + std::to_string(out.hausdorff) + " did not fall below the tolerance");

  const BoundaryMapSamples& S = out.samples;
  auto marks = mark_segments(S);
  for (std::size_t a = 0; a < marks.size(); ++a) {
    FiberArc arc;
    arc.begin_mark = a;
    arc.end_mark = (a + 1) % marks.size();
    for (std::size_t i : segment_indices(S, marks[a])) arc.samples.push_back(S.values[i]);
    bool degenerate = std::all_of(arc.samples.begin(), arc.samples.end(), [&](const std::vector<double>& v) {
      for (std::size_t k = 0; k < v.size(); ++k)
        if (chordal_dist(v[k], arc.samples.front()[k]) > 1e-12) return false;
      return true;
    });
    if (degenerate) {
      std::vector<ProjValue> pt;
      for (double v : arc.samples.front()) pt.push_back(ProjValue::from_double(v));
      out.points.push_back(std::move(pt));
    } else {
      out.arcs.push_back(std::move(arc));
    }
  }

  const ProjValue levels[] = {ProjValue(Rat(0)), ProjValue::infinity(), ProjValue(Rat(1)), ProjValue(Rat(-1))};
  for (std::size_t i = 0; i < F.size(); ++i) {
    const RationalFn& f = F.members[i];
    for (const ProjValue& c : levels) {
      BiPoly L = c.is_infinite() ? f.q() : f.level_curve(c.value().exact());
      if (L.is_zero() || L.is_constant() || !L.eval(z.x, z.y).is_zero()) continue;
      BranchSet bs = expand_branches(L, z, order);
      for (const PuiseuxBranch& b : bs.branches) {
        FiberAnchor a;
        a.member = i;
        a.level = c;
        a.branch_id = b.id;
        a.direction = b.direction;
        try {
          for (const RationalFn& g : F.members) a.values.push_back(limit_along(g, b).value);
        } catch (const Error&) {
          continue;
        }
        out.anchors.push_back(std::move(a));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- coherence

CoherenceSignature CoherenceSignature::flipped() const {
  CoherenceSignature s = *this;
  std::swap(s.less, s.greater);
  return s;
}

BoundaryMapSamples refine_at_net(const Family& F, const BoundaryMapSamples& s, int level) {
  Net net = build_net(level);
  const double N = static_cast<double>(net.size());
  Evaluator ev(F, s.center, s.radius);
  const double two_pi = 2.0 * std::numbers::pi;
  // members continuous at the center are constant on the limit boundary map
  std::vector<std::optional<double>> pinned(F.size());
  for (std::size_t k = 0; k < F.size(); ++k) {
    const RationalFn& f = F.members[k];
    if (!f.p().eval(s.center.x, s.center.y).is_zero() || !f.q().eval(s.center.x, s.center.y).is_zero())
      pinned[k] = value_of(f, s.center).to_double();
  }
  auto pin = [&](std::vector<double> v) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (pinned[k]) v[k] = *pinned[k];
    return v;
  };
  std::vector<Sample> pts;
  std::vector<bool> marked(s.size(), false);
  for (std::size_t m : s.marks) marked[m] = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool on = marked[i];
    std::vector<double> v = pin(s.values[i]);
    for (std::size_t k = 0; k < v.size(); ++k) on = on || (!pinned[k] && net.on_net(v[k], 1e-15));
    pts.push_back({s.thetas[i], std::move(v), on});
  }
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double>& va = pts[i].v;
    const std::vector<double>& vb = pts[(i + 1) % n].v;
    double ta = s.thetas[i], tb = s.thetas[(i + 1) % n];
    if (i + 1 == n) tb += two_pi;
    for (std::size_t k = 0; k < va.size(); ++k) {
      double ua = to_turn(va[k]), d = turn_delta(ua, to_turn(vb[k]));
      if (d == 0) continue;
      double lo = std::min(ua * N, (ua + d) * N), hi = std::max(ua * N, (ua + d) * N);
      for (double j = std::floor(lo) + 1; j < hi; j += 1) {
        if (j - lo < 1e-9 || hi - j < 1e-9) continue;
        double w = j / N;
        w -= std::floor(w);
        auto side = [&](double th) { return turn_delta(w, to_turn(ev.at(th)[k])); };
        double a = ta, b = tb, sa = side(a);
        for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
          double mid = 0.5 * (a + b);
          double sm = side(mid);
          if ((sm > 0) == (sa > 0)) {
            a = mid;
            sa = sm;
          } else {
            b = mid;
          }
        }
        double th = 0.5 * (a + b);
        Sample sm{th >= two_pi ? th - two_pi : th, pin(ev.at(th)), true};
        sm.v[k] = from_turn(w);
        pts.push_back(std::move(sm));
      }
    }
  }
  std::sort(pts.begin(), pts.end(), [](const Sample& a, const Sample& b) { return a.theta < b.theta; });
  BoundaryMapSamples out;
  out.center = s.center;
  out.radius = s.radius;
  for (Sample& p : pts) {
    if (!out.thetas.empty() && p.theta - out.thetas.back() < 1e-15) {
      if (p.mark && (out.marks.empty() || out.marks.back() != out.thetas.size() - 1)) out.marks.push_back(out.thetas.size() - 1);
      continue;
    }
    if (p.mark) out.marks.push_back(out.thetas.size());
    out.thetas.push_back(p.theta);
    out.values.push_back(std::move(p.v));
  }
  return out;
}

CoherenceSignature coherence_signature(const BoundaryMapSamples& s, SampleSegment seg, int level) {
  Net net = build_net(level);
  const std::size_t N = net.size();
  const double Nd = static_cast<double>(N);
  std::vector<std::size_t> idx = segment_indices(s, seg);
  CoherenceSignature sig;
  sig.level = level;
  const std::size_t K = s.values.front().size();
  for (std::size_t k = 0; k < K; ++k) {
    double ua = to_turn(s.values[idx.front()][k]), ub = to_turn(s.values[idx.back()][k]);
    std::vector<double> interior;
    for (std::size_t t = 1; t + 1 < idx.size(); ++t) interior.push_back(to_turn(s.values[idx[t]][k]));
    if (interior.empty()) {
      double m = ua + 0.5 * turn_delta(ua, ub);
      interior.push_back(m - std::floor(m));
    }
    // cells compatible with every interior value
    std::vector<std::size_t> cand;
    bool first = true;
    for (double u : interior) {
      double v = u * Nd;
      double fl = std::floor(v);
      std::vector<std::size_t> c{static_cast<std::size_t>(fl) % N};
      if (v - fl < 1e-7) c.push_back((static_cast<std::size_t>(fl) + N - 1) % N);
      if (fl + 1 - v < 1e-7) c.push_back((static_cast<std::size_t>(fl) + 1) % N);
      if (first) {
        cand = c;
        first = false;
      } else {
        std::vector<std::size_t> keep;
        for (std::size_t x : cand)
          if (std::find(c.begin(), c.end(), x) != c.end()) keep.push_back(x);
        cand = std::move(keep);
      }
      if (cand.empty())
        throw Error(Errc::CellStraddle, "member " + std::to_string(k) + " crosses a net point inside the segment");
    }
    sig.cube.push_back(cand.front());
    double d = turn_delta(ua, ub);
    if (std::fabs(d) <= 1e-12)
      sig.equal.push_back(k);
    else if (d > 0)
      sig.less.push_back(k);
    else
      sig.greater.push_back(k);
  }
  return sig;
}

namespace {

bool sig_less(const CoherenceSignature& a, const CoherenceSignature& b) {
  return std::tie(a.less, a.equal, a.greater, a.cube) < std::tie(b.less, b.equal, b.greater, b.cube);
}

}  // namespace

std::vector<CoherenceClass> coherence_classes(const Family& F, const BoundaryMapSamples& s, int level,
                                              BoundaryMapSamples* refined) {
  BoundaryMapSamples R = refine_at_net(F, s, level);
  std::vector<CoherenceClass> classes;
  for (SampleSegment seg : mark_segments(R)) {
    CoherenceSignature sig = coherence_signature(R, seg, level);
    CoherenceSignature fl = sig.flipped();
    bool rev = sig_less(fl, sig);
    const CoherenceSignature& key = rev ? fl : sig;
    auto it = std::find_if(classes.begin(), classes.end(), [&](const CoherenceClass& c) { return c.signature == key; });
    if (it == classes.end()) {
      classes.push_back({key, {}, {}});
      it = classes.end() - 1;
    }
    it->segments.push_back(seg);
    it->reversed.push_back(rev);
  }
  if (refined) *refined = std::move(R);
  return classes;
}

}  // namespace graphoid
