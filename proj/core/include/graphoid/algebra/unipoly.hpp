#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/algebra/bigfloat.hpp"
#include "graphoid/algebra/coef.hpp"

namespace graphoid {

/// Dense univariate polynomial over Q, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<long> coeffs);
  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& lc() const { return c_.back(); }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  Coef eval(const Coef& x) const;
  BigFloat eval(const BigFloat& x) const;
  double eval(double x) const;
  UniPoly derivative() const;
  /// p(x + a)
  UniPoly shift(const Rat& a) const;
  /// x^deg * p(1/x)
  UniPoly reversed() const;
  UniPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive() const;
  /// Largest k with x^k | p.
  int x_valuation() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& s, const UniPoly& a);
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder, b nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; the remainder must vanish.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Yun decomposition: (factor, multiplicity) with squarefree, pairwise coprime factors.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);
/// Canonical Sturm chain p, p', -rem(...), ...
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

}  // namespace graphoid
