#include "graphoid/algebra/elimination.hpp"

#include "graphoid/algebra/roots.hpp"
#include "graphoid/error.hpp"

namespace graphoid {
namespace {

using YPoly = std::vector<UniPoly>;  // coefficients in y over Q[x]

int ydeg(const YPoly& p) {
  for (std::size_t k = p.size(); k-- > 0;)
    if (!p[k].is_zero()) return static_cast<int>(k);
  return -1;
}

void ytrim(YPoly& p) { p.resize(static_cast<std::size_t>(ydeg(p) + 1)); }

UniPoly ycontent(const YPoly& p) {
  UniPoly g;
  for (const UniPoly& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

YPoly ydiv(const YPoly& p, const UniPoly& c) {
  YPoly r;
  r.reserve(p.size());
  for (const UniPoly& v : p) r.push_back(v.is_zero() ? UniPoly() : exact_div(v, c));
  return r;
}

YPoly yprimitive(const YPoly& p) {
  UniPoly c = ycontent(p);
  if (c.is_zero()) return p;
  return ydiv(p, c);
}

// Pseudo-remainder of a by b in y.
YPoly yprem(YPoly a, const YPoly& b) {
  int db = ydeg(b);
  const UniPoly& lb = b[static_cast<std::size_t>(db)];
  for (int da = ydeg(a); da >= db; da = ydeg(a)) {
    UniPoly la = a[static_cast<std::size_t>(da)];
    for (UniPoly& c : a) c = lb * c;
    for (int k = 0; k <= db; ++k) a[static_cast<std::size_t>(da - db + k)] -= la * b[static_cast<std::size_t>(k)];
    ytrim(a);
  }
  return a;
}

}  // namespace

BiPoly poly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  YPoly A = a.y_coeffs(), B = b.y_coeffs();
  UniPoly ca = ycontent(A), cb = ycontent(B);
  UniPoly c = gcd(ca, cb);
  A = ydiv(A, ca);
  B = ydiv(B, cb);
  if (ydeg(A) < ydeg(B)) std::swap(A, B);
  while (ydeg(B) > 0) {
    YPoly R = yprem(A, B);
    A = std::move(B);
    if (ydeg(R) < 0) {
      B.clear();
      break;
    }
    B = yprimitive(R);
  }
  YPoly G;
  if (ydeg(B) == 0) {
    G = {UniPoly::constant(Rat(1))};
  } else {
    G = yprimitive(A);
  }
  for (UniPoly& v : G) v = c * v;
  return BiPoly::from_y_coeffs(G).primitive();
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(Rat(1));
  UniPoly prev = UniPoly::constant(Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_div(v, prev);
      }
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::DegenerateInput, "resultant of the zero polynomial");
  int da = a.deg_y(), db = b.deg_y();
  if (da <= 0 && db <= 0) throw Error(Errc::DegenerateInput, "both polynomials are free of y");
  YPoly A = a.y_coeffs(), B = b.y_coeffs();
  const std::size_t n = static_cast<std::size_t>(da + db);
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
  // rows 0..da-1: shifted coefficients of b (highest first); then db rows of a
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = B[static_cast<std::size_t>(db - k)];
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k)
      m[static_cast<std::size_t>(da + r)][static_cast<std::size_t>(r + k)] = A[static_cast<std::size_t>(da - k)];
  return determinant(std::move(m));
}

UniPoly resultant_x(const BiPoly& a, const BiPoly& b) { return resultant_y(a.swap_xy(), b.swap_xy()); }

UniPoly discriminant_y(const BiPoly& p) {
  if (p.deg_y() <= 0) return UniPoly::constant(Rat(1));
  return resultant_y(p, p.dy());
}

UniPoly discriminant_x(const BiPoly& p) { return discriminant_y(p.swap_xy()); }

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_zero()) return {};
  if (p.is_constant()) return BiPoly::constant(Rat(1));
  BiPoly g = poly_gcd(p, p.dx());
  g = poly_gcd(g, p.dy());
  return exact_div(p, g).primitive();
}

std::vector<BiPoly> coprime_basis(const std::vector<BiPoly>& polys) {
  std::vector<BiPoly> basis;
  auto push = [&](const BiPoly& f) {
    if (!f.is_zero() && !f.is_constant()) basis.push_back(f.primitive());
  };
  for (const BiPoly& p : polys) {
    // split off the factors that depend on one variable only
    BiPoly f = squarefree_part(p);
    if (f.is_zero() || f.is_constant()) continue;
    BiPoly cx = BiPoly::from_y_coeffs({ycontent(f.y_coeffs())});
    if (!cx.is_constant()) {
      push(cx);
      f = exact_div(f, cx);
    }
    auto xc = f.x_coeffs();
    UniPoly cyu = ycontent(xc);
    BiPoly cy = BiPoly::from_y_coeffs({cyu}).swap_xy();
    if (!cy.is_constant()) {
      push(cy);
      f = exact_div(f, cy);
    }
    push(f);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        BiPoly g = poly_gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        BiPoly a = exact_div(basis[i], g), b = exact_div(basis[j], g);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        push(a);
        push(b);
        push(g);
        changed = true;
      }
    }
  }
  return basis;
}

std::vector<Point> common_real_zeros(const BiPoly& f, const BiPoly& g, int precision_bits) {
  std::vector<Point> out;
  if (f.is_zero() || g.is_zero()) throw Error(Errc::DegenerateInput, "common zeros with the zero polynomial");
  if (f.is_constant() || g.is_constant()) return out;
  auto roots_of = [&](bool in_y) -> std::vector<RealRoot> {
    bool free_f = in_y ? f.deg_y() <= 0 : f.deg_x() <= 0;
    bool free_g = in_y ? g.deg_y() <= 0 : g.deg_x() <= 0;
    UniPoly r;
    if (free_f && free_g) {
      // both are polynomials in the other variable only
      r = in_y ? gcd(f.as_x_poly(), g.as_x_poly()) : gcd(f.as_y_poly(), g.as_y_poly());
    } else {
      r = in_y ? resultant_y(f, g) : resultant_x(f, g);
    }
    if (r.is_zero()) throw Error(Errc::DegenerateInput, "polynomials share a common factor");
    return isolate_real_roots(r, precision_bits);
  };
  std::vector<RealRoot> xs = roots_of(true), ys = roots_of(false);
  for (const RealRoot& rx : xs) {
    for (const RealRoot& ry : ys) {
      if (rx.exact && ry.exact) {
        if (sgn(f.eval(*rx.exact, *ry.exact)) == 0 && sgn(g.eval(*rx.exact, *ry.exact)) == 0)
          out.push_back({Coef(*rx.exact), Coef(*ry.exact)});
        continue;
      }
      Coef cx = rx.coef(), cy = ry.coef();
      if (f.eval(cx, cy).is_zero() && g.eval(cx, cy).is_zero()) out.push_back({cx, cy});
    }
  }
  return out;
}

}  // namespace graphoid
