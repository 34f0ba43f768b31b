#include "graphoid/projective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "graphoid/error.hpp"

namespace graphoid {

ProjValue ProjValue::from_double(double v, int precision_bits) {
  if (std::isinf(v)) return infinity();
  if (std::isnan(v)) throw Error(Errc::DegenerateInput, "nan is not a point of the projective line");
  return ProjValue(Coef(BigFloat::from_double(v, 0.0, precision_bits)));
}

double ProjValue::to_double() const { return inf_ ? std::numeric_limits<double>::infinity() : v_.to_double(); }

double ProjValue::turn() const { return to_turn(to_double()); }

std::string ProjValue::to_string(int digits) const {
  if (inf_) return "inf";
  if (v_.is_exact()) return v_.exact().get_str();
  return v_.to_decimal(digits);
}

bool operator==(const ProjValue& a, const ProjValue& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  if (a.v_.is_exact() && b.v_.is_exact()) return a.v_.exact() == b.v_.exact();
  return compatible(a.v_, b.v_);
}

double to_turn(double x) {
  if (std::isinf(x)) return 0.5;
  double u = std::atan(x) / std::numbers::pi;
  return u < 0 ? u + 1.0 : u;
}

double from_turn(double u) {
  u -= std::floor(u);
  if (u == 0.5) return std::numeric_limits<double>::infinity();
  if (u == 0.0) return 0.0;
  if (u == 0.25) return 1.0;
  if (u == 0.75) return -1.0;
  return std::tan(std::numbers::pi * u);
}

double turn_delta(double a, double b) {
  double d = b - a;
  d -= std::floor(d + 0.5);
  return d;
}

double chordal_dist(double a, double b) {
  bool ia = std::isinf(a), ib = std::isinf(b);
  if (ia && ib) return 0.0;
  if (ia) return 2.0 / std::hypot(1.0, b);
  if (ib) return 2.0 / std::hypot(1.0, a);
  return 2.0 * std::fabs(a - b) / (std::hypot(1.0, a) * std::hypot(1.0, b));
}

double chordal_dist(const ProjValue& a, const ProjValue& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (!a.is_infinite() && !b.is_infinite() && a.value().is_exact() && b.value().is_exact() &&
      a.value().exact() == b.value().exact())
    return 0.0;
  return chordal_dist(a.to_double(), b.to_double());
}

std::string to_string(Segment s) {
  switch (s) {
    case Segment::ZeroOne: return "[0,1]";
    case Segment::OneInf: return "(1,inf]";
    case Segment::InfMinusOne: return "(inf,-1)";
    case Segment::MinusOneZero: return "[-1,0)";
  }
  return "?";
}

Segment segment_of(double x) {
  if (std::isinf(x)) return Segment::OneInf;
  if (x >= 0 && x <= 1) return Segment::ZeroOne;
  if (x > 1) return Segment::OneInf;
  if (x < -1) return Segment::InfMinusOne;
  return Segment::MinusOneZero;
}

Segment segment_of(const ProjValue& x) {
  if (x.is_infinite()) return Segment::OneInf;
  const Coef& v = x.value();
  if (!v.is_exact()) return segment_of(v.to_double());
  const Rat& q = v.exact();
  if (q >= 0 && q <= 1) return Segment::ZeroOne;
  if (q > 1) return Segment::OneInf;
  if (q < -1) return Segment::InfMinusOne;
  return Segment::MinusOneZero;
}

bool in_closure(double x, Segment s) {
  if (std::isinf(x)) return s == Segment::OneInf || s == Segment::InfMinusOne;
  switch (s) {
    case Segment::ZeroOne: return x >= 0 && x <= 1;
    case Segment::OneInf: return x >= 1;
    case Segment::InfMinusOne: return x <= -1;
    case Segment::MinusOneZero: return x >= -1 && x <= 0;
  }
  return false;
}

double segment_chart(double x, Segment s) {
  if (!in_closure(x, s)) throw Error(Errc::OutOfSegment, "value outside " + to_string(s));
  switch (s) {
    case Segment::ZeroOne: return x;
    case Segment::MinusOneZero: return x + 1.0;
    case Segment::OneInf: return std::isinf(x) ? 1.0 : 1.0 - 1.0 / x;
    case Segment::InfMinusOne: return std::isinf(x) ? 0.0 : -1.0 / x;
  }
  return 0.0;
}

Coef segment_chart(const ProjValue& x, Segment s) {
  if (x.is_infinite()) {
    if (s == Segment::OneInf) return Coef(1L);
    if (s == Segment::InfMinusOne) return Coef(0L);
    throw Error(Errc::OutOfSegment, "infinity outside " + to_string(s));
  }
  const Coef& v = x.value();
  if (!v.is_exact()) {
    double d = v.to_double(), e = v.error_double();
    // the ball may straddle an endpoint of the segment
    double probe = in_closure(d, s) ? d : (in_closure(d + e, s) ? d + e : d - e);
    if (!in_closure(probe, s)) throw Error(Errc::OutOfSegment, "value " + v.to_decimal(17) + " outside " + to_string(s));
    switch (s) {
      case Segment::ZeroOne: return v;
      case Segment::MinusOneZero: return v + Coef(1L);
      case Segment::OneInf: return Coef(1L) - Coef(1L) / v;
      case Segment::InfMinusOne: return -(Coef(1L) / v);
    }
  }
  const Rat& q = v.exact();
  bool ok = false;
  switch (s) {
    case Segment::ZeroOne: ok = q >= 0 && q <= 1; break;
    case Segment::OneInf: ok = q >= 1; break;
    case Segment::InfMinusOne: ok = q <= -1; break;
    case Segment::MinusOneZero: ok = q >= -1 && q <= 0; break;
  }
  if (!ok) throw Error(Errc::OutOfSegment, "value " + q.get_str() + " outside " + to_string(s));
  switch (s) {
    case Segment::ZeroOne: return Coef(q);
    case Segment::MinusOneZero: return Coef(Rat(q + 1));
    case Segment::OneInf: return Coef(Rat(1 - 1 / q));
    case Segment::InfMinusOne: return Coef(Rat(-1 / q));
  }
  return Coef();
}

std::size_t Net::cell(double x) const {
  double u = to_turn(x) * static_cast<double>(size());
  auto k = static_cast<std::size_t>(std::floor(u + 1e-9));
  return k % size();
}

bool Net::on_net(double x, double slack) const {
  double u = to_turn(x) * static_cast<double>(size());
  return std::fabs(u - std::round(u)) <= slack * static_cast<double>(size());
}

double Net::covering_radius() const { return 2.0 * std::sin(std::numbers::pi / (2.0 * static_cast<double>(size()))); }

Net build_net(int level) {
  if (level < 0) throw Error(Errc::DegenerateInput, "net level must be nonnegative");
  if (level > 40) throw Error(Errc::DegenerateInput, "net level too large");
  return Net{level};
}

std::vector<std::pair<std::size_t, std::size_t>> neighbor_pairs(const std::vector<double>& turns) {
  if (turns.size() < 2) throw Error(Errc::TooFewPoints, "neighbor pairs need at least two points");
  std::vector<std::size_t> idx(turns.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto norm = [&](std::size_t i) { return turns[i] - std::floor(turns[i]); };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return norm(a) < norm(b); });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < idx.size(); ++k) out.emplace_back(idx[k], idx[(k + 1) % idx.size()]);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> neighbor_pairs(const std::vector<ProjValue>& points) {
  std::vector<double> t;
  t.reserve(points.size());
  for (const ProjValue& p : points) t.push_back(p.turn());
  return neighbor_pairs(t);
}

}  // namespace graphoid
