#include "graphoid/limits.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "graphoid/algebra/elimination.hpp"
#include "graphoid/error.hpp"

namespace graphoid {

Series compose_along(const BiPoly& p, const PuiseuxBranch& b) {
  CoefPoly P = translate_to(p, b.center).rotate(b.frame);
  std::size_t n = b.psi.size();
  if (b.exact) {
    // finite expansion: keep the whole composed polynomial
    std::size_t len = std::max<std::size_t>(n, 1);
    n = std::max(n, static_cast<std::size_t>(std::max(p.total_degree(), 0) + 1) * std::max<std::size_t>(static_cast<std::size_t>(b.m), len));
  }
  return compose(P, b.m, b.psi, n);
}

namespace {

// Index and value of the first coefficient certified nonzero. Balls around
// zero narrower than 2^(-precision/2) are passed over as vanishing (the lead
// is then flagged); a wider one stops the search undecided.
struct Lead {
  bool decided = false;  // found a certified nonzero lead
  bool all_zero = false;  // every coefficient is zero
  bool skipped = false;  // passed over a numerically vanishing ball
  int index = -1;
  Coef value;
};

Lead leading(const Series& s) {
  Lead l;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Coef& c = s[k];
    if (c.is_exact() && sgn(c.exact()) == 0) continue;
    if (c.is_zero()) {
      if (c.error_double() < std::ldexp(1.0, -c.precision() / 2)) {
        l.skipped = true;
        continue;
      }
      return l;
    }
    l.decided = true;
    l.index = static_cast<int>(k);
    l.value = c;
    return l;
  }
  l.all_zero = true;
  return l;
}

// Whether p vanishes identically on the branch, or nullopt when the series
// at this order cannot tell.
std::optional<bool> vanishes_on(const BiPoly& p, const PuiseuxBranch& b) {
  if (p.is_zero()) return true;
  if (p.is_constant()) return false;
  BiPoly g = poly_gcd(p, b.curve);
  if (g.is_constant()) return false;
  BiPoly h = exact_div(b.curve, g);
  if (h.is_constant()) return true;
  // the branch lies on exactly one of g, h
  Lead lh = leading(compose_along(h, b));
  if (lh.decided) return true;
  Lead lg = leading(compose_along(g, b));
  if (lg.decided) return false;
  if (lh.all_zero) return false;
  if (lg.all_zero) return true;
  return std::nullopt;
}

}  // namespace

BranchLimit limit_along(const RationalFn& f, const PuiseuxBranch& b_in) {
  if (f.is_constant()) throw Error(Errc::ConstantFunction, "function is constant");
  PuiseuxBranch b = b_in;
  for (int order = std::max(1, static_cast<int>((b.psi.size() - 1) / static_cast<std::size_t>(b.m)));; order *= 2) {
    std::optional<bool> zp = vanishes_on(f.p(), b), zq = vanishes_on(f.q(), b);
    if (zp && zq && *zp && *zq) throw Error(Errc::IndeterminateOnBranch, "numerator and denominator vanish on the branch");
    BranchLimit out;
    out.certified = true;
    if (zp && *zp) {
      out.value = ProjValue(Rat(0));
      return out;
    }
    if (zq && *zq) {
      out.value = ProjValue::infinity();
      return out;
    }
    Lead lp = leading(compose_along(f.p(), b)), lq = leading(compose_along(f.q(), b));
    if (lp.decided && lq.decided) {
      out.certified = !lp.skipped && !lq.skipped;
      out.leading_exponent = Rat(lq.index - lp.index, b.m);
      out.leading_exponent.canonicalize();
      if (lp.index > lq.index) {
        out.value = ProjValue(Rat(0));
      } else if (lp.index < lq.index) {
        out.value = ProjValue::infinity();
      } else {
        out.value = ProjValue(lp.value / lq.value);
      }
      return out;
    }
    if (order * 2 > kMaxLimitOrder || !b.continuation)
      throw Error(Errc::TruncationInsufficient, "leading coefficients not certified at order " + std::to_string(order));
    b.extend(order * 2);
  }
}

bool conjugate_limits_equal(const RationalFn& f, const BranchSet& set, const PuiseuxBranch& b) {
  BranchLimit l1 = limit_along(f, b);
  BranchLimit l2 = limit_along(f, set.conjugate_of(b));
  if (l1.value.is_infinite() || l2.value.is_infinite()) return l1.value.is_infinite() && l2.value.is_infinite();
  const Coef& a = l1.value.value();
  const Coef& c = l2.value.value();
  if (a.is_exact() && c.is_exact()) return a.exact() == c.exact();
  return chordal_dist(l1.value, l2.value) <= 1e-9;
}

}  // namespace graphoid
