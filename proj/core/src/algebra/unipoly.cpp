#include "graphoid/algebra/unipoly.hpp"

#include <cassert>
#include <sstream>

#include "graphoid/error.hpp"

namespace graphoid {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Coef UniPoly::eval(const Coef& x) const {
  Coef r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Coef(*it);
  return r;
}

BigFloat UniPoly::eval(const BigFloat& x) const {
  BigFloat r(x.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + BigFloat(*it, x.precision());
  return r;
}

double UniPoly::eval(double x) const {
  long double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return static_cast<double>(r);
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::shift(const Rat& a) const {
  // Horner in the ring: ((c_n)(x+a) + c_{n-1})(x+a) + ...
  UniPoly lin(std::vector<Rat>{a, Rat(1)});
  UniPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
  return r;
}

UniPoly UniPoly::reversed() const {
  std::vector<Rat> v(c_.rbegin(), c_.rend());
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  Rat inv = 1 / lc();
  return inv * *this;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Int den = 1;
  for (const Rat& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rat> v;
  v.reserve(c_.size());
  Int g = 0;
  for (const Rat& c : c_) {
    Rat s = c * den;
    v.push_back(s);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (sgn(v.back()) < 0) g = -g;
  for (Rat& c : v) c /= Rat(g);
  return UniPoly(std::move(v));
}

int UniPoly::x_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (Rat& c : r.c_) c = -c;
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
  if (sgn(s) == 0) return {};
  UniPoly r = a;
  for (Rat& c : r.c_) c *= s;
  return r;
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rat a = ::abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || i == 0) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::DegenerateInput, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  Rat inv = 1 / b.lc();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat f = r[static_cast<std::size_t>(k + b.degree())] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= f * bc[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  assert(r.is_zero());
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  UniPoly d = p.derivative();
  UniPoly a0 = gcd(p, d);
  UniPoly b = exact_div(p, a0);
  UniPoly c = exact_div(d, a0);
  UniPoly e = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly a = gcd(b, e);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = exact_div(b, a);
    c = exact_div(e, a);
    e = c - b.derivative();
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, gcd(p, p.derivative())).monic();
}

namespace {

// Positive rescaling to integer coefficients; signs are preserved.
UniPoly positive_primitive(const UniPoly& p) {
  UniPoly r = p.primitive();
  return sgn(p.lc()) < 0 ? -r : r;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> s;
  if (p.is_zero()) return s;
  s.push_back(positive_primitive(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return s;
  s.push_back(positive_primitive(d));
  while (true) {
    UniPoly r = divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(positive_primitive(-r));
  }
  return s;
}

}  // namespace graphoid
