#include "graphoid/degree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "graphoid/error.hpp"

namespace graphoid {

SampledCircleMap make_circle_map(std::vector<double> domain, std::vector<double> turns) {
  if (turns.size() < 2 || domain.size() != turns.size()) throw Error(Errc::UnderSampled, "a circle map needs at least two samples");
  SampledCircleMap m;
  m.domain = std::move(domain);
  m.values = std::move(turns);
  for (double& v : m.values) v -= std::floor(v);
  const std::size_t n = m.values.size();
  m.lift.resize(n);
  m.lift[0] = m.values[0];
  for (std::size_t i = 0; i < n; ++i) {
    double d = turn_delta(m.values[i], m.values[(i + 1) % n]);
    if (std::fabs(d) > kMaxLiftJump)
      throw Error(Errc::UnderSampled, "lift jumps by " + std::to_string(d) + " turns at sample " + std::to_string(i));
    if (i + 1 < n) m.lift[i + 1] = m.lift[i] + d;
  }
  // step directions including the wrap step n-1 -> 0
  std::vector<int> dir(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    double d = turn_delta(m.values[i], m.values[(i + 1) % n]);
    dir[i] = d > 0 ? 1 : (d < 0 ? -1 : 0);
  }
  std::vector<std::size_t> turns_at;
  auto first = std::find_if(dir.begin(), dir.end(), [](int d) { return d != 0; });
  if (first != dir.end()) {
    const std::size_t f = static_cast<std::size_t>(first - dir.begin());
    int last = dir[f];
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t i = (f + j) % n;
      if (dir[i] == 0) continue;
      if (dir[i] != last) turns_at.push_back(i);
      last = dir[i];
    }
  }
  if (turns_at.empty()) {
    m.monotone_pieces.emplace_back(0, n - 1);
  } else {
    std::sort(turns_at.begin(), turns_at.end());
    turns_at.erase(std::unique(turns_at.begin(), turns_at.end()), turns_at.end());
    for (std::size_t p = 0; p < turns_at.size(); ++p)
      m.monotone_pieces.emplace_back(turns_at[p], turns_at[(p + 1) % turns_at.size()]);
  }
  return m;
}

SampledCircleMap circle_map(const BoundaryMapSamples& s, std::size_t k) {
  std::vector<double> t;
  t.reserve(s.size());
  for (const auto& v : s.values) t.push_back(to_turn(v.at(k)));
  return make_circle_map(s.thetas, std::move(t));
}

SampledCircleMap radial_map(const BoundaryMapSamples& s) {
  std::vector<double> t;
  t.reserve(s.size());
  for (double th : s.thetas) {
    auto [ox, oy] = square_offset(th);
    t.push_back(static_cast<double>(std::atan2(oy, ox)) / (2.0 * std::numbers::pi));
  }
  return make_circle_map(s.thetas, std::move(t));
}

namespace {

double circ_dist(double a, double b) { return std::fabs(turn_delta(a, b)); }

long count_crossings(const SampledCircleMap& m, double y) {
  const std::size_t n = m.size();
  long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double a = m.lift[i];
    double b = a + turn_delta(m.values[i], m.values[(i + 1) % n]);
    double lo = std::min(a, b), hi = std::max(a, b);
    // integers k with lo < y + k < hi
    double kmin = std::floor(lo - y) + 1, kmax = std::ceil(hi - y) - 1;
    if (kmax >= kmin) count += static_cast<long>(kmax - kmin + 1);
  }
  return count;
}

}  // namespace

ParityReport z2_degree(const SampledCircleMap& m, std::optional<double> regular_value, Rng& rng) {
  const std::size_t n = m.size();
  std::vector<double> extrema;
  if (m.monotone_pieces.size() > 1)
    for (const auto& piece : m.monotone_pieces) extrema.push_back(m.values[piece.first]);
  double y;
  if (regular_value) {
    y = *regular_value - std::floor(*regular_value);
  } else {
    const double gap = 2.0 / static_cast<double>(n);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      y = U(rng);
      found = std::none_of(extrema.begin(), extrema.end(), [&](double e) { return circ_dist(e, y) < gap; }) &&
              std::none_of(m.values.begin(), m.values.end(), [&](double v) { return circ_dist(v, y) < 1e-9; });
    }
    if (!found) throw Error(Errc::NoRegularValue, "no regular value found after 32 draws");
  }
  ParityReport r;
  r.regular_value = y;
  r.preimage_count = count_crossings(m, y);
  r.odd = r.preimage_count % 2 != 0;
  r.z2_trivial = !r.odd;
  return r;
}

long winding_degree(const SampledCircleMap& m) {
  const std::size_t n = m.size();
  double total = m.lift[n - 1] - m.lift[0] + turn_delta(m.values[n - 1], m.values[0]);
  double w = std::round(total);
  if (std::fabs(total - w) > 0.01) throw Error(Errc::NonIntegralWinding, "winding " + std::to_string(total) + " is not integral");
  return static_cast<long>(w);
}

// ---------------------------------------------------------------- additivity

namespace {

double sup_dist_d(const Point& a, const Point& b) {
  return std::max(std::fabs(a.x.to_double() - b.x.to_double()), std::fabs(a.y.to_double() - b.y.to_double()));
}

Rat dyadic_below(double v) {
  // largest power of two not above v
  if (!(v > 0)) return Rat(0);
  Rat r(1);
  int e = std::ilogb(v);
  if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned>(e));
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned>(-e));
  return r;
}

}  // namespace

AdditivityReport additivity_check(const Family& F, const Point& center, const Rat& radius, std::size_t coordinate, Rng& rng,
                                  std::size_t n) {
  if (coordinate >= F.size()) throw Error(Errc::DegenerateInput, "coordinate out of range");
  if (radius <= 0) throw Error(Errc::GeometryViolation, "radius must be positive");
  AdditivityReport rep;
  rep.center = center;
  rep.radius = radius;
  rep.coordinate = coordinate;
  const double R = radius.get_d();
  std::vector<Point> inside;
  for (const Point& s : F.singular_points()) {
    double d = sup_dist_d(center, s);
    if (std::fabs(d - R) <= 1e-12 * std::max(1.0, R)) throw Error(Errc::GeometryViolation, "a singular point lies on the outer square");
    if (d < R) inside.push_back(s);
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    double lim = (R - sup_dist_d(center, inside[i])) / 3.0;
    for (std::size_t j = 0; j < inside.size(); ++j)
      if (j != i) lim = std::min(lim, sup_dist_d(inside[i], inside[j]) / 3.0);
    Rat rho = std::min(Rat(a_small_radius(F.level_curves(), inside[i]) / 2), dyadic_below(lim));
    if (rho <= 0) throw Error(Errc::GeometryViolation, "singular points are too close to separate");
    InnerCircle c;
    c.center = inside[i];
    c.radius = rho;
    SampledCircleMap m = circle_map(sample_boundary_map(F, inside[i], rho, n, false), coordinate);
    c.parity = z2_degree(m, std::nullopt, rng);
    c.winding = winding_degree(m);
    rep.inner_xor = rep.inner_xor != c.parity.odd;
    rep.inner.push_back(std::move(c));
  }
  SampledCircleMap outer = circle_map(sample_boundary_map(F, center, radius, n, false), coordinate);
  rep.outer = z2_degree(outer, std::nullopt, rng);
  rep.outer_winding = winding_degree(outer);
  rep.consistent = rep.outer.odd == rep.inner_xor;
  return rep;
}

// ---------------------------------------------------------------- parity probe

namespace {

double mu_clamped(double v, Segment seg) {
  if (in_closure(v, seg)) return segment_chart(v, seg);
  double u = to_turn(v), a = 0.25 * static_cast<int>(seg);
  return circ_dist(u, a) < circ_dist(u, a + 0.25) ? 0.0 : 1.0;
}

}  // namespace

ParityReport parity_probe(const BoundaryMapSamples& s, const CoherenceClass& cls, Rng& rng, std::optional<double> level) {
  const CoherenceSignature& sig = cls.signature;
  const std::size_t K = sig.cube.size();
  const std::size_t per_segment = build_net(sig.level).size() / 4;
  std::vector<Segment> canon(K);
  std::vector<int> eps(K, 0);
  for (std::size_t k = 0; k < K; ++k) canon[k] = static_cast<Segment>(sig.cube[k] / per_segment);
  for (std::size_t k : sig.less) eps[k] = 1;
  for (std::size_t k : sig.greater) eps[k] = -1;

  // mu images of the samples of every segment, oriented along the class
  std::vector<std::vector<std::vector<double>>> mus;
  for (std::size_t i = 0; i < cls.segments.size(); ++i) {
    std::vector<std::size_t> idx = segment_indices(s, cls.segments[i]);
    if (cls.reversed[i]) std::reverse(idx.begin(), idx.end());
    std::vector<std::vector<double>> seg;
    for (std::size_t j : idx) {
      std::vector<double> mu(K);
      for (std::size_t k = 0; k < K; ++k) mu[k] = mu_clamped(s.values[j][k], canon[k]);
      seg.push_back(std::move(mu));
    }
    mus.push_back(std::move(seg));
  }
  std::vector<const std::vector<double>*> ends;
  for (const auto& seg : mus) {
    ends.push_back(&seg.front());
    ends.push_back(&seg.back());
  }

  std::uniform_real_distribution<double> W(1.0, 2.0);
  std::vector<double> alpha(K);
  auto lambda = [&](const std::vector<double>& mu) {
    double v = 0;
    for (std::size_t k = 0; k < K; ++k) v += eps[k] * alpha[k] * mu[k];
    return v;
  };
  bool injective = false;
  for (int attempt = 0; attempt < 32 && !injective; ++attempt) {
    for (double& a : alpha) a = W(rng);
    injective = true;
    for (std::size_t i = 0; i < ends.size() && injective; ++i) {
      for (std::size_t j = i + 1; j < ends.size() && injective; ++j) {
        double dt = 0;
        for (std::size_t k = 0; k < K; ++k) dt = std::max(dt, std::fabs((*ends[i])[k] - (*ends[j])[k]));
        if (dt > 1e-9 && std::fabs(lambda(*ends[i]) - lambda(*ends[j])) <= 1e-12) injective = false;
      }
    }
  }
  if (!injective) throw Error(Errc::InjectivityFailure, "no weights separate the end images after 32 draws");

  std::vector<double> end_vals;
  for (const auto* e : ends) end_vals.push_back(lambda(*e));
  double y;
  if (level) {
    y = *level;
  } else {
    double lo = *std::min_element(end_vals.begin(), end_vals.end());
    double hi = *std::max_element(end_vals.begin(), end_vals.end());
    std::uniform_real_distribution<double> U(lo, hi > lo ? hi : lo + 1.0);
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      y = U(rng);
      found = std::none_of(end_vals.begin(), end_vals.end(), [&](double v) { return std::fabs(v - y) < 1e-9; });
    }
    if (!found) throw Error(Errc::NoRegularValue, "no generic level found after 32 draws");
  }
  ParityReport r;
  r.regular_value = y;
  for (const auto& seg : mus) {
    double prev = lambda(seg.front()) - y;
    for (std::size_t j = 1; j < seg.size(); ++j) {
      double cur = lambda(seg[j]) - y;
      if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) ++r.preimage_count;
      if (cur != 0) prev = cur;
    }
  }
  r.odd = r.preimage_count % 2 != 0;
  r.z2_trivial = !r.odd;
  return r;
}

// ---------------------------------------------------------------- obstruction

ObstructionReport obstruction_report(const Family& F, const Point& center, const Rat& radius, std::size_t coordinate, Rng& rng,
                                     std::size_t n) {
  ObstructionReport rep;
  rep.additivity = additivity_check(F, center, radius, coordinate, rng, n);
  if (rep.additivity.inner.empty()) {
    rep.verdict = "no singular points inside the square; no obstruction applies";
    return rep;
  }
  rep.applies = true;
  rep.radial_winding = winding_degree(radial_map(sample_boundary_map(F, center, radius, n, false)));
  rep.radial_odd = rep.radial_winding % 2 != 0;
  rep.inner_odd = rep.additivity.inner_xor;
  rep.obstruction = rep.radial_odd != rep.inner_odd;
  rep.verdict = rep.obstruction ? "obstruction: radial degree is odd while the inner parity is even"
                                : "no obstruction: radial and inner parities agree";
  return rep;
}

// ---------------------------------------------------------------- Mobius

Point mobius_center(const RationalFn& f) {
  const BiPoly &p = f.p(), &q = f.q();
  bool shape = p.deg_y() <= 0 && p.deg_x() == 1 && q.deg_x() <= 0 && q.deg_y() == 1 && p.coeff(1, 0) == q.coeff(0, 1);
  if (!shape) throw Error(Errc::WrongShape, f.to_string() + " is not of the form (x - a)/(y - b)");
  Rat a = -p.coeff(0, 0) / p.coeff(1, 0), b = -q.coeff(0, 0) / q.coeff(0, 1);
  return {Coef(a), Coef(b)};
}

MobiusReport mobius_check(const RationalFn& f, const Rat& radius, std::size_t n) {
  MobiusReport rep;
  rep.center = mobius_center(f);
  auto [a, b] = rational_center(rep.center);
  RationalFn g(f.p().translate(a, b), f.q().translate(a, b));
  const long double r = radius.get_d();
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < n / 2; ++k) {
    double th = two_pi * static_cast<double>(k) / static_cast<double>(n);
    auto [ox, oy] = square_offset(th);
    double v1 = static_cast<double>(g.eval(r * ox, r * oy));
    double v2 = static_cast<double>(g.eval(-r * ox, -r * oy));
    rep.max_antipodal = std::max(rep.max_antipodal, chordal_dist(v1, v2));
  }
  Family F{{f}};
  rep.winding = winding_degree(circle_map(sample_boundary_map(F, rep.center, radius, n, false), 0));
  rep.ok = rep.max_antipodal <= 1e-9 && std::labs(rep.winding) == 2;
  return rep;
}

}  // namespace graphoid
