#include "graphoid/algebra/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "graphoid/error.hpp"

namespace graphoid {

BiPoly::BiPoly(Terms terms) {
  for (auto& [m, c] : terms)
    if (sgn(c) != 0) t_.emplace(m, c);
}

BiPoly BiPoly::constant(const Rat& c) { return monomial(c, 0, 0); }
BiPoly BiPoly::x() { return monomial(Rat(1), 1, 0); }
BiPoly BiPoly::y() { return monomial(Rat(1), 0, 1); }

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
  BiPoly p;
  if (sgn(c) != 0) p.t_.emplace(Monomial{i, j}, c);
  return p;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UniPoly>& coeffs) {
  BiPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& c = coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) p.t_.emplace(Monomial{static_cast<int>(i), static_cast<int>(j)}, c[i]);
  }
  return p;
}

void BiPoly::add_term(const Monomial& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

bool BiPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{0, 0}); }

int BiPoly::total_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.i + t_.rbegin()->first.j; }

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.i);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.j);
  return d;
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = t_.find(Monomial{i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  auto v = y_coeffs();
  Rat s = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) s = s * y + it->eval(x);
  return s;
}

Coef BiPoly::eval(const Coef& x, const Coef& y) const {
  auto v = y_coeffs();
  Coef s;
  for (auto it = v.rbegin(); it != v.rend(); ++it) s = s * y + it->eval(x);
  return s;
}

long double BiPoly::eval(long double x, long double y) const {
  long double s = 0;
  for (const auto& [m, c] : t_) {
    long double v = c.get_d();
    for (int k = 0; k < m.i; ++k) v *= x;
    for (int k = 0; k < m.j; ++k) v *= y;
    s += v;
  }
  return s;
}

double BiPoly::eval(double x, double y) const {
  return static_cast<double>(eval(static_cast<long double>(x), static_cast<long double>(y)));
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.i > 0) r.add_term({m.i - 1, m.j}, c * m.i);
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.j > 0) r.add_term({m.i, m.j - 1}, c * m.j);
  return r;
}

BiPoly BiPoly::swap_xy() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(Monomial{m.j, m.i}, c);
  return r;
}

BiPoly BiPoly::translate(const Rat& a, const Rat& b) const {
  if (sgn(a) == 0 && sgn(b) == 0) return *this;
  BiPoly xa = x() + constant(a);
  BiPoly yb = y() + constant(b);
  std::vector<BiPoly> xp{constant(Rat(1))}, yp{constant(Rat(1))};
  for (int k = 1; k <= deg_x(); ++k) xp.push_back(xp.back() * xa);
  for (int k = 1; k <= deg_y(); ++k) yp.push_back(yp.back() * yb);
  BiPoly r;
  for (const auto& [m, c] : t_) r += c * (xp[static_cast<std::size_t>(m.i)] * yp[static_cast<std::size_t>(m.j)]);
  return r;
}

UniPoly BiPoly::restrict_line(const Rat& x0, const Rat& y0, const Rat& dx, const Rat& dy) const {
  UniPoly lx(std::vector<Rat>{x0, dx}), ly(std::vector<Rat>{y0, dy});
  std::vector<UniPoly> xp{UniPoly::constant(Rat(1))}, yp{UniPoly::constant(Rat(1))};
  for (int k = 1; k <= deg_x(); ++k) xp.push_back(xp.back() * lx);
  for (int k = 1; k <= deg_y(); ++k) yp.push_back(yp.back() * ly);
  UniPoly r;
  for (const auto& [m, c] : t_) r += c * (xp[static_cast<std::size_t>(m.i)] * yp[static_cast<std::size_t>(m.j)]);
  return r;
}

std::vector<UniPoly> BiPoly::y_coeffs() const {
  int dy = deg_y();
  std::vector<std::vector<Rat>> raw(static_cast<std::size_t>(std::max(dy, -1) + 1));
  for (const auto& [m, c] : t_) {
    auto& v = raw[static_cast<std::size_t>(m.j)];
    if (v.size() <= static_cast<std::size_t>(m.i)) v.resize(static_cast<std::size_t>(m.i) + 1);
    v[static_cast<std::size_t>(m.i)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

std::vector<UniPoly> BiPoly::x_coeffs() const { return swap_xy().y_coeffs(); }

UniPoly BiPoly::as_x_poly() const {
  if (deg_y() > 0) throw Error(Errc::DegenerateInput, "polynomial depends on y");
  auto v = y_coeffs();
  return v.empty() ? UniPoly() : v[0];
}

UniPoly BiPoly::as_y_poly() const { return swap_xy().as_x_poly(); }

BiPoly BiPoly::primitive() const {
  if (t_.empty()) return {};
  Int den = 1, g = 0;
  for (const auto& [m, c] : t_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : t_) {
    Rat s = c * den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  Rat scale = Rat(den) / Rat(g);
  if (sgn(lc()) < 0) scale = -scale;
  return scale * *this;
}

BiPoly BiPoly::monic() const {
  if (t_.empty()) return {};
  return Rat(1 / lc()) * *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
  return r;
}

BiPoly operator*(const Rat& s, const BiPoly& a) {
  if (sgn(s) == 0) return {};
  BiPoly r = a;
  for (auto& [m, c] : r.t_) c *= s;
  return r;
}

BiPoly pow(const BiPoly& p, int e) {
  BiPoly r = BiPoly::constant(Rat(1)), b = p;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(Errc::DegenerateInput, "division by the zero polynomial");
  BiPoly rem = a, q;
  Monomial lb = b.leading_monomial();
  Rat lcb = b.lc();
  while (!rem.is_zero()) {
    Monomial la = rem.leading_monomial();
    if (la.i < lb.i || la.j < lb.j) throw Error(Errc::DegenerateInput, "inexact polynomial division");
    BiPoly t = BiPoly::monomial(rem.lc() / lcb, la.i - lb.i, la.j - lb.j);
    q += t;
    rem -= t * b;
  }
  return q;
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = m.i > 0 || m.j > 0;
    bool sep = false;
    if (a != 1 || !has_var) {
      os << a.get_str();
      sep = true;
    }
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (sep) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      sep = true;
    };
    var('x', m.i);
    var('y', m.j);
  }
  return os.str();
}

}  // namespace graphoid
