#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace graphoid {

using Int = mpz_class;
using Rat = mpq_class;

inline constexpr int kDefaultPrecision = 256;

/// Ball arithmetic over MPFR: a midpoint plus a rigorous error radius.
///
/// Every operation returns a ball that contains the exact result of the
/// same operation applied to any points of the argument balls. The radius
/// is kept in a 64-bit MPFR value and always rounded upward.
class BigFloat {
 public:
  explicit BigFloat(int precision_bits = kDefaultPrecision);
  BigFloat(const Rat& q, int precision_bits);
  BigFloat(const Rat& mid, const Rat& radius, int precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Exact double (plus optional radius).
  static BigFloat from_double(double v, double radius, int precision_bits);

  int precision() const;

  double to_double() const;
  double error_double() const;
  Rat mid_rat() const;
  Rat err_rat() const;

  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_nonzero() const { return certainly_positive() || certainly_negative(); }
  bool contains_zero() const { return !certainly_nonzero(); }
  bool contains(const Rat& q) const;
  /// Certified sign, 0 when the ball contains zero.
  int sign() const;

  BigFloat abs() const;
  BigFloat operator-() const;
  BigFloat sqrt() const;

  /// Grows the radius by `extra` (absolute).
  void widen(const Rat& extra);

  std::string to_decimal(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  /// Throws PrecisionLoss when the divisor ball contains zero.
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  mpfr_srcptr mid() const { return val_; }
  mpfr_srcptr rad() const { return err_; }
  mpfr_ptr mid_mut() { return val_; }
  mpfr_ptr rad_mut() { return err_; }

  /// Adds one ulp of the midpoint to the radius when `inexact` is nonzero.
  void account_rounding(int inexact);

 private:
  mpfr_t val_;
  mpfr_t err_;
};

}  // namespace graphoid
