#include "graphoid/algebra/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "graphoid/error.hpp"

namespace graphoid {
namespace {

using IntPoly = std::vector<Int>;

IntPoly to_ints(const UniPoly& p) {
  UniPoly q = p.primitive();
  if (sgn(p.lc()) < 0) q = -q;
  IntPoly out;
  out.reserve(q.coeffs().size());
  for (const Rat& c : q.coeffs()) out.push_back(c.get_num());
  return out;
}

// Sign of p(num/den), den > 0.
int sign_at(const IntPoly& p, const Int& num, const Int& den) {
  if (p.empty()) return 0;
  Int s = p.back();
  Int pw = den;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    s *= num;
    s += p[i] * pw;
    pw *= den;
  }
  return sgn(s);
}

int sign_at(const IntPoly& p, const Rat& x) { return sign_at(p, x.get_num(), x.get_den()); }

struct Sturm {
  std::vector<IntPoly> chain;
  explicit Sturm(const UniPoly& f) {
    for (const UniPoly& s : sturm_sequence(f)) chain.push_back(to_ints(s));
  }
  int variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const IntPoly& p : chain) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
};

Rat dyadic_bound(const UniPoly& p) {
  Rat m = 0;
  for (const Rat& c : p.coeffs()) m = std::max(m, Rat(abs(c / p.lc())));
  Rat b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

struct Isolated {
  Rat lo, hi;
  std::optional<Rat> exact;
};

Rat linear_root_factor_div(UniPoly& f, const Rat& r) {
  UniPoly lin(std::vector<Rat>{-r, Rat(1)});
  f = exact_div(f, lin);
  return r;
}

// Refines a single-root interval of squarefree f down to the requested width.
Isolated refine(const IntPoly& fi, const UniPoly& f, Rat lo, Rat hi, const Rat& width) {
  int shi = sign_at(fi, hi);
  if (shi == 0) return {hi, hi, hi};
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    int sm = sign_at(fi, mid);
    if (sm == 0) return {mid, mid, mid};
    if (sm == shi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Rat s = simplest_rational(lo, hi);
  if (sgn(f.eval(s)) == 0) return {s, s, s};
  return {lo, hi, std::nullopt};
}

// Distinct real roots of a squarefree polynomial.
std::vector<Isolated> isolate_squarefree(UniPoly f, const Rat& width) {
  std::vector<Isolated> out;
  while (f.degree() >= 1) {
    if (sgn(f.coeff(0)) == 0) {
      out.push_back({Rat(0), Rat(0), Rat(0)});
      linear_root_factor_div(f, Rat(0));
      continue;
    }
    if (f.degree() == 1) {
      Rat r = -f.coeff(0) / f.coeff(1);
      out.push_back({r, r, r});
      break;
    }
    Sturm st(f);
    IntPoly fi = to_ints(f);
    Rat b = dyadic_bound(f);
    struct Job { Rat lo, hi; int vlo, vhi; };
    std::vector<Job> jobs{{-b, b, st.variations(-b), st.variations(b)}};
    std::vector<Isolated> found;
    std::optional<Rat> hit;
    while (!jobs.empty() && !hit) {
      Job j = jobs.back();
      jobs.pop_back();
      int count = j.vlo - j.vhi;
      if (count <= 0) continue;
      if (count == 1) {
        found.push_back(refine(fi, f, j.lo, j.hi, width));
        continue;
      }
      Rat mid = (j.lo + j.hi) / 2;
      if (sign_at(fi, mid) == 0) {
        hit = mid;
        break;
      }
      int vm = st.variations(mid);
      jobs.push_back({mid, j.hi, vm, j.vhi});
      jobs.push_back({j.lo, mid, j.vlo, vm});
    }
    if (hit) {
      // deflate the rational root and start over on the cofactor
      out.push_back({*hit, *hit, *hit});
      linear_root_factor_div(f, *hit);
      continue;
    }
    out.insert(out.end(), found.begin(), found.end());
    break;
  }
  return out;
}

Rat width_for(int precision_bits) {
  Rat w = 1;
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), static_cast<mp_bitcnt_t>(std::max(precision_bits - 8, 8)));
  return w;
}

RealRoot to_root(const Isolated& iso, int mult, int precision_bits) {
  RealRoot r{BigFloat(precision_bits), mult, iso.exact, iso.lo, iso.hi};
  if (iso.exact) {
    r.value = BigFloat(*iso.exact, precision_bits);
  } else {
    r.value = BigFloat((iso.lo + iso.hi) / 2, (iso.hi - iso.lo) / 2, precision_bits);
  }
  return r;
}

struct Tagged {
  Isolated iso;
  int mult;
  const UniPoly* factor;
};

std::vector<Tagged> isolate_all(const std::vector<std::pair<UniPoly, int>>& factors, const Rat& width) {
  std::vector<Tagged> all;
  for (const auto& [f, k] : factors)
    for (const Isolated& iso : isolate_squarefree(f, width)) all.push_back({iso, k, &f});
  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    return a.iso.lo + a.iso.hi < b.iso.lo + b.iso.hi;
  });
  return all;
}

// -1 / 0 / +1: root below, equal to, or above x.
int compare_root(const Tagged& t, const Rat& x) {
  if (t.iso.exact) return cmp(*t.iso.exact, x) < 0 ? -1 : (*t.iso.exact == x ? 0 : 1);
  if (t.iso.hi < x) return -1;
  if (t.iso.lo > x) return 1;
  IntPoly fi = to_ints(*t.factor);
  int sx = sign_at(fi, x);
  if (sx == 0) return 0;
  int slo = sign_at(fi, t.iso.lo);
  return slo != sx ? -1 : 1;
}

}  // namespace

Rat root_bound(const UniPoly& p) { return dyadic_bound(p); }

Rat simplest_rational(const Rat& lo_in, const Rat& hi_in) {
  Rat lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
  bool neg = sgn(hi) < 0;
  if (neg) {
    Rat t = -hi;
    hi = -lo;
    lo = t;
  }
  // continued-fraction descent on [lo, hi], 0 < lo
  std::vector<Int> terms;
  while (true) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rat(fl) == lo) {
      terms.push_back(fl);
      break;
    }
    Int fl1 = fl + 1;
    if (Rat(fl1) <= hi) {
      terms.push_back(fl1);
      break;
    }
    terms.push_back(fl);
    Rat nlo = 1 / (hi - Rat(fl));
    Rat nhi = 1 / (lo - Rat(fl));
    lo = nlo;
    hi = nhi;
  }
  Rat r = Rat(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) r = Rat(terms[i]) + 1 / r;
  return neg ? Rat(-r) : r;
}

int count_roots(const UniPoly& p, const Rat& a, const Rat& b) {
  if (p.degree() <= 0) return 0;
  Sturm st(squarefree_part(p));
  return st.variations(a) - st.variations(b);
}

std::vector<RealRoot> isolate_real_roots(const UniPoly& p, int precision_bits) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  auto factors = squarefree_decomposition(p);
  for (const Tagged& t : isolate_all(factors, width_for(precision_bits)))
    out.push_back(to_root(t.iso, t.mult, precision_bits));
  return out;
}

std::vector<RealRoot> real_roots_in(const UniPoly& p, const Rat& a, const Rat& b, int precision_bits) {
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  auto factors = squarefree_decomposition(p);
  for (const Tagged& t : isolate_all(factors, width_for(precision_bits))) {
    int ca = compare_root(t, a);
    int cb = compare_root(t, b);
    if (ca < 0 || cb > 0) continue;
    Isolated iso = t.iso;
    if (ca == 0) iso = {a, a, a};
    if (cb == 0) iso = {b, b, b};
    out.push_back(to_root(iso, t.mult, precision_bits));
  }
  return out;
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth(const std::vector<long double>& c) {
  int n = static_cast<int>(c.size()) - 1;
  std::vector<cld> z(static_cast<std::size_t>(n));
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
  long double rad = std::pow(bound + 1, 1.0L / n);
  for (int i = 0; i < n; ++i) {
    long double ang = 2 * M_PIl * (i + 0.25L) / n + 0.4L;
    z[i] = std::polar(rad, ang);
  }
  auto eval = [&](cld x, cld& d) {
    cld v = c[n];
    d = 0;
    for (int i = n - 1; i >= 0; --i) {
      d = d * x + v;
      v = v * x + c[i];
    }
    return v;
  };
  for (int it = 0; it < 800; ++it) {
    long double maxstep = 0;
    for (int i = 0; i < n; ++i) {
      cld d;
      cld v = eval(z[i], d);
      if (v == cld(0)) continue;
      cld ratio = v / d;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      z[i] -= w;
      maxstep = std::max(maxstep, std::abs(w) / std::max(1.0L, std::abs(z[i])));
    }
    if (maxstep < 1e-19L) break;
  }
  return z;
}

std::vector<Coef> derivative_coefs(const std::vector<Coef>& c) {
  std::vector<Coef> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Coef(static_cast<long>(i)));
  return d;
}

BigFloat eval_ball(const std::vector<Coef>& c, const BigFloat& x) {
  BigFloat r(x.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + it->approx(x.precision());
  return r;
}

}  // namespace

std::vector<RealRoot> real_roots_coef(const std::vector<Coef>& coeffs, int precision_bits) {
  std::vector<Coef> c = coeffs;
  while (!c.empty() && c.back().is_exact() && sgn(c.back().exact()) == 0) c.pop_back();
  if (c.size() <= 1) return {};
  bool exact = std::all_of(c.begin(), c.end(), [](const Coef& v) { return v.is_exact(); });
  if (exact) {
    std::vector<Rat> q;
    for (const Coef& v : c) q.push_back(v.exact());
    return isolate_real_roots(UniPoly(std::move(q)), precision_bits);
  }
  if (c.back().is_zero()) throw Error(Errc::PrecisionLoss, "leading coefficient not certified nonzero");

  std::vector<long double> cd;
  for (const Coef& v : c) cd.push_back(static_cast<long double>(v.to_double()));
  std::vector<cld> z = aberth(cd);

  // group by proximity
  long double scale = 0;
  for (const cld& r : z) scale = std::max(scale, std::abs(r));
  long double tol = 1e-4L * std::max(1.0L, scale);
  std::vector<int> group(z.size(), -1);
  int ng = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (group[i] >= 0) continue;
    group[i] = ng;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (group[j] >= 0) continue;
        for (std::size_t k = 0; k < z.size(); ++k) {
          if (group[k] == ng && std::abs(z[j] - z[k]) < tol) {
            group[j] = ng;
            grew = true;
            break;
          }
        }
      }
    }
    ++ng;
  }

  std::vector<RealRoot> out;
  for (int g = 0; g < ng; ++g) {
    cld center = 0;
    int k = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (group[i] == g) {
        center += z[i];
        ++k;
      }
    center /= static_cast<long double>(k);
    if (std::abs(center.imag()) > tol) continue;

    std::vector<Coef> h = c;
    for (int i = 1; i < k; ++i) h = derivative_coefs(h);
    std::vector<Coef> dh = derivative_coefs(h);
    BigFloat x = BigFloat::from_double(static_cast<double>(center.real()), 0, precision_bits);
    for (int it = 0; it < 12; ++it) {
      BigFloat fx = eval_ball(h, x), dx = eval_ball(dh, x);
      BigFloat fm(fx.mid_rat(), precision_bits), dm(dx.mid_rat(), precision_bits);
      if (!dm.certainly_nonzero()) break;
      x = BigFloat(x.mid_rat(), precision_bits) - fm / dm;
      x = BigFloat(x.mid_rat(), precision_bits);
    }
    Rat mid = x.mid_rat();
    Rat delta = 1;
    mpq_div_2exp(delta.get_mpq_t(), delta.get_mpq_t(), static_cast<mp_bitcnt_t>(std::max(precision_bits - 16, 24)));
    delta *= std::max(Rat(1), Rat(abs(mid)));
    bool ok = false;
    for (int attempt = 0; attempt < 12 && !ok; ++attempt) {
      int sl = eval_ball(h, BigFloat(mid - delta, precision_bits)).sign();
      int sr = eval_ball(h, BigFloat(mid + delta, precision_bits)).sign();
      if (sl != 0 && sr != 0 && sl != sr) {
        ok = true;
      } else {
        delta *= Rat(1 << 16);
      }
    }
    if (!ok) throw Error(Errc::PrecisionLoss, "numeric root could not be certified");
    out.push_back(RealRoot{BigFloat(mid, delta, precision_bits), k, std::nullopt, mid - delta, mid + delta});
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace graphoid
