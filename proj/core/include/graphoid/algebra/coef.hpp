#pragma once

#include <string>
#include <variant>

#include "graphoid/algebra/bigfloat.hpp"

namespace graphoid {

/// A real number that is exact (Rat) whenever the computation allowed it,
/// and a certified ball otherwise.
class Coef {
 public:
  Coef() : v_(Rat(0)) {}
  Coef(const Rat& q) : v_(q) {}  // NOLINT(google-explicit-constructor)
  Coef(Rat&& q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Coef(long n) : v_(Rat(n)) {}  // NOLINT(google-explicit-constructor)
  Coef(const BigFloat& b) : v_(b) {}  // NOLINT(google-explicit-constructor)
  Coef(BigFloat&& b) : v_(std::move(b)) {}  // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rat>(v_); }
  const Rat& exact() const { return std::get<Rat>(v_); }
  const BigFloat& ball() const { return std::get<BigFloat>(v_); }
  /// Ball view; exact values are converted at `precision_bits`.
  BigFloat approx(int precision_bits = kDefaultPrecision) const;
  /// Precision of the ball, 0 when exact.
  int precision() const;

  /// Exact zero, or a ball containing zero.
  bool is_zero() const;
  bool certainly_nonzero() const { return !is_zero(); }
  /// Certified sign; 0 for (possible) zero.
  int sign() const;

  double to_double() const;
  double error_double() const;
  std::string to_decimal(int digits = 20) const;

  Coef operator-() const;
  Coef abs() const;

  friend Coef operator+(const Coef& a, const Coef& b);
  friend Coef operator-(const Coef& a, const Coef& b);
  friend Coef operator*(const Coef& a, const Coef& b);
  friend Coef operator/(const Coef& a, const Coef& b);
  Coef& operator+=(const Coef& b) { return *this = *this + b; }
  Coef& operator-=(const Coef& b) { return *this = *this - b; }
  Coef& operator*=(const Coef& b) { return *this = *this * b; }

  /// Two values that may be equal: exact equality, or overlapping balls.
  friend bool compatible(const Coef& a, const Coef& b);

 private:
  std::variant<Rat, BigFloat> v_;
};

Coef pow(const Coef& base, unsigned e);

}  // namespace graphoid
