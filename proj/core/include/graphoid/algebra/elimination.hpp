#pragma once

#include <vector>

#include "graphoid/algebra/bipoly.hpp"
#include "graphoid/algebra/point.hpp"
#include "graphoid/algebra/unipoly.hpp"

namespace graphoid {

/// Greatest common divisor, normalized by BiPoly::primitive().
BiPoly poly_gcd(const BiPoly& a, const BiPoly& b);

/// Resultant eliminating y, as the determinant of the Sylvester matrix whose
/// first deg_y(a) rows hold the coefficients of b. With this row order
/// Res(y^2 - x^3, y - x) = x^2 - x^3 and Res(y - 1, y + 1) = -2.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);
UniPoly resultant_x(const BiPoly& a, const BiPoly& b);

/// Discriminant-like elimination: resultant_y(p, p_y) (zero-free form, no lc division).
UniPoly discriminant_y(const BiPoly& p);
UniPoly discriminant_x(const BiPoly& p);

/// p / gcd(p, p_x, p_y), primitive.
BiPoly squarefree_part(const BiPoly& p);

/// Pairwise coprime squarefree nonconstant polynomials whose product has
/// the same zero set as the product of the inputs.
std::vector<BiPoly> coprime_basis(const std::vector<BiPoly>& polys);

/// Real common zeros of coprime f and g. Candidates are products of real
/// roots of resultant_y and resultant_x; a candidate survives when neither
/// polynomial is certified nonzero on its box. Exact rational points are
/// verified exactly.
std::vector<Point> common_real_zeros(const BiPoly& f, const BiPoly& g, int precision_bits = kDefaultPrecision);

/// Determinant of a square matrix over Q[x] (fraction-free Bareiss).
UniPoly determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace graphoid
