#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "graphoid/algebra/coef.hpp"
#include "graphoid/algebra/unipoly.hpp"

namespace graphoid {

/// Exponent pair x^i y^j, ordered graded-lexicographically (total degree, then i).
struct Monomial {
  int i = 0;
  int j = 0;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = (a.i + a.j) <=> (b.i + b.j); c != 0) return c;
    return a.i <=> b.i;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Sparse bivariate polynomial over Q.
class BiPoly {
 public:
  using Terms = std::map<Monomial, Rat>;

  BiPoly() = default;
  explicit BiPoly(Terms terms);
  static BiPoly constant(const Rat& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(const Rat& c, int i, int j);
  /// sum_j coeffs[j](x) y^j
  static BiPoly from_y_coeffs(const std::vector<UniPoly>& coeffs);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  int deg_x() const;
  int deg_y() const;
  /// Leading term in graded-lex order.
  const Rat& lc() const { return t_.rbegin()->second; }
  Monomial leading_monomial() const { return t_.rbegin()->first; }
  Rat coeff(int i, int j) const;

  Rat eval(const Rat& x, const Rat& y) const;
  Coef eval(const Coef& x, const Coef& y) const;
  double eval(double x, double y) const;
  long double eval(long double x, long double y) const;

  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly swap_xy() const;
  /// p(x + a, y + b)
  BiPoly translate(const Rat& a, const Rat& b) const;
  /// p(x0 + t dx, y0 + t dy) as a polynomial in t.
  UniPoly restrict_line(const Rat& x0, const Rat& y0, const Rat& dx, const Rat& dy) const;
  /// Coefficients as a polynomial in y over Q[x].
  std::vector<UniPoly> y_coeffs() const;
  std::vector<UniPoly> x_coeffs() const;
  /// Polynomial in x alone (deg_y must be 0).
  UniPoly as_x_poly() const;
  UniPoly as_y_poly() const;

  /// Integer coefficients, content 1, positive graded-lex leading coefficient.
  BiPoly primitive() const;
  BiPoly monic() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rat& s, const BiPoly& a);
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
  BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

  /// Graded-lex descending, e.g. "x^2 - 2*x*y + 3/4*y^2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  Terms t_;
};

BiPoly pow(const BiPoly& p, int e);

/// Exact division; throws DegenerateInput when b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

}  // namespace graphoid
