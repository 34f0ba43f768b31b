#include "graphoid/algebra/coef.hpp"

#include <algorithm>

#include "graphoid/error.hpp"

namespace graphoid {
namespace {

int working_precision(const Coef& a, const Coef& b) {
  return std::max({a.precision(), b.precision(), 2});
}

}  // namespace

BigFloat Coef::approx(int precision_bits) const {
  if (is_exact()) return BigFloat(exact(), precision_bits);
  return ball();
}

int Coef::precision() const { return is_exact() ? 0 : ball().precision(); }

bool Coef::is_zero() const {
  if (is_exact()) return sgn(exact()) == 0;
  return ball().contains_zero();
}

int Coef::sign() const {
  if (is_exact()) return sgn(exact());
  return ball().sign();
}

double Coef::to_double() const { return is_exact() ? exact().get_d() : ball().to_double(); }

double Coef::error_double() const { return is_exact() ? 0.0 : ball().error_double(); }

std::string Coef::to_decimal(int digits) const {
  if (is_exact()) return BigFloat(exact(), std::max(64, digits * 4)).to_decimal(digits);
  return ball().to_decimal(digits);
}

Coef Coef::operator-() const {
  if (is_exact()) return Coef(Rat(-exact()));
  return Coef(-ball());
}

Coef Coef::abs() const {
  if (is_exact()) return Coef(Rat(::abs(exact())));
  return Coef(ball().abs());
}

Coef operator+(const Coef& a, const Coef& b) {
  if (a.is_exact() && b.is_exact()) return Coef(Rat(a.exact() + b.exact()));
  int p = working_precision(a, b);
  return Coef(a.approx(p) + b.approx(p));
}

Coef operator-(const Coef& a, const Coef& b) {
  if (a.is_exact() && b.is_exact()) return Coef(Rat(a.exact() - b.exact()));
  int p = working_precision(a, b);
  return Coef(a.approx(p) - b.approx(p));
}

Coef operator*(const Coef& a, const Coef& b) {
  if (a.is_exact() && b.is_exact()) return Coef(Rat(a.exact() * b.exact()));
  // exact zero annihilates a ball
  if (a.is_exact() && sgn(a.exact()) == 0) return Coef();
  if (b.is_exact() && sgn(b.exact()) == 0) return Coef();
  int p = working_precision(a, b);
  return Coef(a.approx(p) * b.approx(p));
}

Coef operator/(const Coef& a, const Coef& b) {
  if (a.is_exact() && b.is_exact()) {
    if (sgn(b.exact()) == 0) throw Error(Errc::PrecisionLoss, "division by exact zero");
    return Coef(Rat(a.exact() / b.exact()));
  }
  if (a.is_exact() && sgn(a.exact()) == 0 && b.certainly_nonzero()) return Coef();
  int p = working_precision(a, b);
  return Coef(a.approx(p) / b.approx(p));
}

bool compatible(const Coef& a, const Coef& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return (a - b).is_zero();
}

Coef pow(const Coef& base, unsigned e) {
  Coef r(1L), b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

}  // namespace graphoid
