#include "graphoid/rf_parser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "graphoid/algebra/elimination.hpp"
#include "graphoid/error.hpp"

namespace graphoid {

RationalFn::RationalFn(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw Error(Errc::DivisionByZeroPoly, "denominator is the zero polynomial");
  if (p.is_zero()) {
    q_ = BiPoly::constant(Rat(1));
    return;
  }
  BiPoly g = poly_gcd(p, q);
  BiPoly pp = exact_div(p, g), qq = exact_div(q, g);
  BiPoly qn = qq.primitive();
  // qn = s * qq for a rational s; apply the same scale to p
  Rat s = qn.lc() / qq.lc();
  p_ = s * pp;
  q_ = qn;
}

long double RationalFn::eval(long double x, long double y) const {
  long double num = p_.eval(x, y), den = q_.eval(x, y);
  if (den == 0) return std::numeric_limits<long double>::infinity();
  return num / den;
}

std::string RationalFn::to_string() const {
  if (q_ == BiPoly::constant(Rat(1))) return p_.to_string();
  return "(" + p_.to_string() + ")/(" + q_.to_string() + ")";
}

namespace {

struct Frac {
  BiPoly num, den;
};

Frac frac_of(BiPoly p) { return {std::move(p), BiPoly::constant(Rat(1))}; }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Frac parse() {
    Frac f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Frac expr() {
    Frac a = term();
    for (;;) {
      if (eat('+')) {
        Frac b = term();
        a = {a.num * b.den + b.num * a.den, a.den * b.den};
      } else if (eat('-')) {
        Frac b = term();
        a = {a.num * b.den - b.num * a.den, a.den * b.den};
      } else {
        return a;
      }
    }
  }

  Frac term() {
    Frac a = unary();
    for (;;) {
      if (eat('*')) {
        Frac b = unary();
        a = {a.num * b.num, a.den * b.den};
      } else if (eat('/')) {
        std::size_t at = pos_;
        Frac b = unary();
        if (b.num.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial at offset " + std::to_string(at));
        a = {a.num * b.den, a.den * b.num};
      } else {
        return a;
      }
    }
  }

  Frac unary() {
    if (eat('-')) {
      Frac a = unary();
      return {-a.num, a.den};
    }
    if (eat('+')) return unary();
    return power();
  }

  Frac power() {
    Frac a = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return {pow(a.num, e), pow(a.den, e)};
    }
    return a;
  }

  Frac atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Frac a = expr();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return frac_of(c == 'x' ? BiPoly::x() : BiPoly::y());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Int n(std::string(s_.substr(start, pos_ - start)));
      return frac_of(BiPoly::constant(Rat(n)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RationalFn parse_rational_fn(std::string_view text) {
  Frac f = Parser(text).parse();
  return RationalFn(f.num, f.den);
}

std::vector<RationalFn> parse_family(std::string_view text) {
  std::vector<RationalFn> out;
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    std::size_t end = text.find('\n', line_start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(line_start, end - line_start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) {
      try {
        out.push_back(parse_rational_fn(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(line_start + e.offset(), "line " + std::to_string(line_no) + ": " + e.reason());
      }
    }
    if (end == text.size()) break;
    line_start = end + 1;
  }
  return out;
}

IndeterminacySet indeterminacy_points(const RationalFn& f, int precision_bits) {
  if (f.is_constant()) throw Error(Errc::ConstantFunction, "function is constant");
  IndeterminacySet set;
  if (f.p().is_constant() || f.q().is_constant()) return set;
  set.points = common_real_zeros(f.p(), f.q(), precision_bits);
  std::sort(set.points.begin(), set.points.end(), [](const Point& a, const Point& b) {
    auto [ax, ay] = rational_center(a);
    auto [bx, by] = rational_center(b);
    return ax != bx ? ax < bx : ay < by;
  });
  return set;
}

ChartFlip parse_chart_flip(std::string_view s) {
  if (s == "none") return ChartFlip::None;
  if (s == "x") return ChartFlip::X;
  if (s == "y") return ChartFlip::Y;
  if (s == "xy") return ChartFlip::XY;
  throw Error(Errc::InputError, "unknown chart flip '" + std::string(s) + "'");
}

std::string to_string(ChartFlip c) {
  switch (c) {
    case ChartFlip::None: return "none";
    case ChartFlip::X: return "x";
    case ChartFlip::Y: return "y";
    case ChartFlip::XY: return "xy";
  }
  return "none";
}

namespace {

// x^d p(1/x, y) when in_x, else y^d p(x, 1/y)
BiPoly invert(const BiPoly& p, bool in_x, int d) {
  BiPoly r;
  for (const auto& [m, c] : p.terms())
    r += in_x ? BiPoly::monomial(c, d - m.i, m.j) : BiPoly::monomial(c, m.i, d - m.j);
  return r;
}

}  // namespace

RationalFn flip_chart(const RationalFn& f, ChartFlip c) {
  BiPoly p = f.p(), q = f.q();
  if (c == ChartFlip::X || c == ChartFlip::XY) {
    int d = std::max({p.deg_x(), q.deg_x(), 0});
    p = invert(p, true, d);
    q = invert(q, true, d);
  }
  if (c == ChartFlip::Y || c == ChartFlip::XY) {
    int d = std::max({p.deg_y(), q.deg_y(), 0});
    p = invert(p, false, d);
    q = invert(q, false, d);
  }
  return RationalFn(p, q);
}

}  // namespace graphoid
