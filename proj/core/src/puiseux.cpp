#include "graphoid/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "graphoid/algebra/elimination.hpp"
#include "graphoid/algebra/roots.hpp"
#include "graphoid/error.hpp"

namespace graphoid {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::E: return "E";
    case Direction::N: return "N";
    case Direction::W: return "W";
    case Direction::S: return "S";
  }
  return "?";
}

// ---------------------------------------------------------------- CoefPoly

CoefPoly CoefPoly::from(const BiPoly& p) {
  CoefPoly r;
  for (const auto& [m, c] : p.terms()) r.set(m.i, m.j, Coef(c));
  return r;
}

int CoefPoly::deg_y() const {
  int d = -1;
  for (const auto& row : a_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

const Coef& CoefPoly::at(int i, int j) const {
  static const Coef zero;
  if (i < 0 || j < 0 || i >= static_cast<int>(a_.size())) return zero;
  const auto& row = a_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) return zero;
  return row[static_cast<std::size_t>(j)];
}

void CoefPoly::set(int i, int j, Coef c) {
  if (i >= static_cast<int>(a_.size())) a_.resize(static_cast<std::size_t>(i) + 1);
  auto& row = a_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) row.resize(static_cast<std::size_t>(j) + 1);
  row[static_cast<std::size_t>(j)] = std::move(c);
}

bool CoefPoly::is_zero() const {
  for (const auto& row : a_)
    for (const Coef& c : row)
      if (!c.is_zero()) return false;
  return true;
}

namespace {

std::vector<std::vector<Rat>> binomials(int n) {
  std::vector<std::vector<Rat>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Rat(1));
    for (int k = 1; k < i; ++k)
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] + c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
  }
  return c;
}

std::vector<Coef> powers(const Coef& v, int n) {
  std::vector<Coef> p{Coef(1L)};
  for (int k = 1; k <= n; ++k) p.push_back(p.back() * v);
  return p;
}

}  // namespace

CoefPoly CoefPoly::translate(const Coef& a, const Coef& b) const {
  int dx = deg_x(), dy = std::max(deg_y(), 0);
  if (dx < 0) return *this;
  auto binom = binomials(std::max(dx, dy));
  auto pa = powers(a, dx), pb = powers(b, dy);
  CoefPoly r;
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dy; ++j) {
      const Coef& c = at(i, j);
      if (c.is_exact() && sgn(c.exact()) == 0) continue;
      for (int k = 0; k <= i; ++k) {
        Coef ck = c * Coef(binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) * pa[static_cast<std::size_t>(i - k)];
        for (int l = 0; l <= j; ++l) {
          Coef v = ck * Coef(binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]) * pb[static_cast<std::size_t>(j - l)];
          r.set(k, l, r.at(k, l) + v);
        }
      }
    }
  }
  return r;
}

CoefPoly CoefPoly::rotate(int r) const {
  r = ((r % 4) + 4) % 4;
  if (r == 0) return *this;
  CoefPoly out;
  for (int i = 0; i <= deg_x(); ++i) {
    for (int j = 0; j < static_cast<int>(a_[static_cast<std::size_t>(i)].size()); ++j) {
      const Coef& c = at(i, j);
      if (c.is_exact() && sgn(c.exact()) == 0) continue;
      switch (r) {
        case 1: out.set(j, i, (i % 2) ? -c : c); break;          // p(-y, x)
        case 2: out.set(i, j, ((i + j) % 2) ? -c : c); break;    // p(-x, -y)
        case 3: out.set(j, i, (j % 2) ? -c : c); break;          // p(y, -x)
      }
    }
  }
  return out;
}

CoefPoly CoefPoly::strip_x(int* power) const {
  int k = 0;
  while (k <= deg_x()) {
    bool any = false;
    for (int j = 0; j <= deg_y() && !any; ++j) any = present(k, j);
    if (any) break;
    ++k;
  }
  if (power) *power = k;
  if (k == 0) return *this;
  CoefPoly r;
  for (int i = k; i <= deg_x(); ++i)
    for (int j = 0; j <= deg_y(); ++j)
      if (present(i, j)) r.set(i - k, j, at(i, j));
  return r;
}

CoefPoly CoefPoly::strip_y(int* power) const {
  int k = 0;
  while (k <= deg_y()) {
    bool any = false;
    for (int i = 0; i <= deg_x() && !any; ++i) any = present(i, k);
    if (any) break;
    ++k;
  }
  if (power) *power = k;
  if (k == 0) return *this;
  CoefPoly r;
  for (int i = 0; i <= deg_x(); ++i)
    for (int j = k; j <= deg_y(); ++j)
      if (present(i, j)) r.set(i, j - k, at(i, j));
  return r;
}

Coef CoefPoly::eval(const Coef& x, const Coef& y) const {
  Coef s;
  for (int i = deg_x(); i >= 0; --i) {
    Coef row;
    for (int j = deg_y(); j >= 0; --j) row = row * y + at(i, j);
    s = s * x + row;
  }
  return s;
}

long double CoefPoly::eval(long double x, long double y) const {
  long double s = 0;
  for (int i = deg_x(); i >= 0; --i) {
    long double row = 0;
    for (int j = deg_y(); j >= 0; --j) row = row * y + static_cast<long double>(at(i, j).to_double());
    s = s * x + row;
  }
  return s;
}

CoefPoly translate_to(const BiPoly& p, const Point& center) {
  if (center.is_exact()) return CoefPoly::from(p.translate(center.x.exact(), center.y.exact()));
  return CoefPoly::from(p).translate(center.x, center.y);
}

// ---------------------------------------------------------------- series

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_exact() && sgn(a[i].exact()) == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (b[j].is_exact() && sgn(b[j].exact()) == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Series series_pow(const Series& a, unsigned e, std::size_t n) {
  Series r(n);
  if (n > 0) r[0] = Coef(1L);
  Series b = a;
  while (e) {
    if (e & 1u) r = series_mul(r, b, n);
    e >>= 1u;
    if (e) b = series_mul(b, b, n);
  }
  return r;
}

namespace {

Series series_inv(const Series& a, std::size_t n) {
  Series b(n);
  if (n == 0) return b;
  if (a.empty() || a[0].is_zero()) throw Error(Errc::PrecisionLoss, "series inverse of a non-unit");
  Coef inv = Coef(1L) / a[0];
  b[0] = inv;
  for (std::size_t k = 1; k < n; ++k) {
    Coef s;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * b[k - i];
    b[k] = -(s * inv);
  }
  return b;
}

}  // namespace

Series compose(const CoefPoly& p, int m, const Series& s, std::size_t n) {
  Series r(n);
  Series pw(n);
  if (n > 0) pw[0] = Coef(1L);
  for (int j = 0; j <= p.deg_y(); ++j) {
    if (j > 0) pw = series_mul(pw, s, n);
    for (int i = 0; i <= p.deg_x(); ++i) {
      const Coef& c = p.at(i, j);
      if (c.is_exact() && sgn(c.exact()) == 0) continue;
      std::size_t shift = static_cast<std::size_t>(i) * static_cast<std::size_t>(m);
      for (std::size_t k = 0; k + shift < n; ++k) r[k + shift] += c * pw[k];
    }
  }
  return r;
}

// ---------------------------------------------------------------- Newton polygon

namespace {

struct Edge {
  int i0, j0, i1, j1;  // from (i0, j0) down to (i1, j1), j1 < j0
  int q, d;            // gamma = q/d
  std::vector<Coef> poly;  // index j - j1
};

std::vector<Edge> lower_edges(const CoefPoly& Q) {
  std::vector<Edge> edges;
  int j0 = -1;
  for (int j = 0; j <= Q.deg_y(); ++j)
    if (Q.present(0, j)) {
      j0 = j;
      break;
    }
  if (j0 <= 0) return edges;
  std::vector<int> imin(static_cast<std::size_t>(j0) + 1, -1);
  for (int j = 0; j <= j0; ++j)
    for (int i = 0; i <= Q.deg_x(); ++i)
      if (Q.present(i, j)) {
        imin[static_cast<std::size_t>(j)] = i;
        break;
      }
  if (imin[0] < 0) return edges;
  int ci = 0, cj = j0;
  while (cj > 0) {
    // minimal gamma = (i - ci)/(cj - j); ties resolved toward smaller j
    int best = -1;
    Rat bestg;
    for (int j = cj - 1; j >= 0; --j) {
      int i = imin[static_cast<std::size_t>(j)];
      if (i < 0) continue;
      Rat g(i - ci, cj - j);
      g.canonicalize();
      if (best < 0 || g <= bestg) {
        best = j;
        bestg = g;
      }
    }
    Edge e;
    e.i0 = ci;
    e.j0 = cj;
    e.j1 = best;
    e.i1 = imin[static_cast<std::size_t>(best)];
    e.q = static_cast<int>(bestg.get_num().get_si());
    e.d = static_cast<int>(bestg.get_den().get_si());
    e.poly.assign(static_cast<std::size_t>(e.j0 - e.j1) + 1, Coef());
    for (int j = e.j1; j <= e.j0; ++j) {
      // i = i0 + gamma (j0 - j)
      int num = e.q * (e.j0 - j);
      if (num % e.d != 0) continue;
      int i = e.i0 + num / e.d;
      if (Q.present(i, j)) e.poly[static_cast<std::size_t>(j - e.j1)] = Q.at(i, j);
    }
    edges.push_back(std::move(e));
    ci = edges.back().i1;
    cj = best;
  }
  return edges;
}

}  // namespace

std::vector<NewtonEdge> newton_polygon(const BiPoly& p) {
  if (p.is_zero() || sgn(p.coeff(0, 0)) != 0) throw Error(Errc::NoOrigin, "polynomial does not vanish at the origin");
  CoefPoly Q = CoefPoly::from(p).strip_x().strip_y();
  std::vector<NewtonEdge> out;
  for (const Edge& e : lower_edges(Q)) {
    std::vector<Rat> c;
    for (const Coef& v : e.poly) c.push_back(v.exact());
    NewtonEdge ne;
    ne.slope = Rat(-e.d, e.q);
    ne.slope.canonicalize();
    ne.edge_poly = UniPoly(std::move(c));
    ne.j_min = e.j1;
    ne.j_max = e.j0;
    out.push_back(std::move(ne));
  }
  return out;
}

// ---------------------------------------------------------------- expansion

namespace detail {

struct Continuation {
  CoefPoly q;       // regular stage: Q(t, Y) = 0, Y(0) = 0, Q_Y(0,0) != 0
  Series prefix;    // psi up to index a
  int a = 0;        // psi = prefix + t^a Y(t)
  int m = 1;
  Series y;         // Y coefficients computed so far
  int precision = kDefaultPrecision;
};

}  // namespace detail

namespace {

using detail::Continuation;

// Solves Q(t, Y) = 0 for Y mod t^n by Newton doubling.
Series solve_regular(const CoefPoly& Q, std::size_t n) {
  Series y(1);
  if (n <= 1) return Series(n);
  CoefPoly Qy;
  for (int i = 0; i <= Q.deg_x(); ++i)
    for (int j = 1; j <= Q.deg_y(); ++j)
      if (Q.present(i, j)) Qy.set(i, j - 1, Q.at(i, j) * Coef(static_cast<long>(j)));
  std::size_t prec = 1;
  while (prec < n) {
    prec = std::min(2 * prec, n);
    y.resize(prec);
    auto horner = [&](const CoefPoly& P) {
      Series acc(prec);
      for (int j = P.deg_y(); j >= 0; --j) {
        acc = series_mul(acc, y, prec);
        for (int i = 0; i <= P.deg_x() && static_cast<std::size_t>(i) < prec; ++i) acc[static_cast<std::size_t>(i)] += P.at(i, j);
      }
      return acc;
    };
    Series F = horner(Q);
    Series D = horner(Qy);
    Series corr = series_mul(F, series_inv(D, prec), prec);
    for (std::size_t k = 0; k < prec; ++k) y[k] -= corr[k];
    y[0] = Coef();
  }
  return y;
}

void fill_psi(Continuation& c, std::size_t total, Series& psi) {
  std::size_t need = total > static_cast<std::size_t>(c.a) ? total - static_cast<std::size_t>(c.a) : 1;
  if (c.y.size() < need) c.y = solve_regular(c.q, need);
  psi = c.prefix;
  psi.resize(std::max(total, psi.size()));
  for (std::size_t k = 1; k < c.y.size() && static_cast<std::size_t>(c.a) + k < psi.size(); ++k)
    psi[static_cast<std::size_t>(c.a) + k] += c.y[k];
}

enum class Lead { XDominant, Diagonal, YDominant };

Lead classify(const Rat& gamma, const Coef& c) {
  if (gamma > 1) return Lead::XDominant;
  if (gamma < 1) return Lead::YDominant;
  Coef d = c.abs() - Coef(1L);
  if (d.is_zero()) return Lead::Diagonal;
  return d.sign() < 0 ? Lead::XDominant : Lead::YDominant;
}

struct Raw {
  int frame = 0;
  int m = 1;
  Series psi;
  bool exact = false;
  std::shared_ptr<Continuation> cont;
  Lead lead = Lead::XDominant;
  Coef c1;
};

struct StageTerm {
  Rat e;
  Coef c;
};

struct Expander {
  int order;
  int precision;
  int frame;
  bool x_frame;
  std::vector<Raw>* out;

  std::size_t total_len(int m, int a) const {
    std::size_t t = static_cast<std::size_t>(order) * static_cast<std::size_t>(m) + 1;
    return std::max(t, static_cast<std::size_t>(a) + 2);
  }

  Series prefix_series(const std::vector<StageTerm>& terms, int m) const {
    Series s;
    for (const StageTerm& t : terms) {
      Rat idx = t.e * m;
      std::size_t k = static_cast<std::size_t>(idx.get_num().get_ui());
      if (s.size() <= k) s.resize(k + 1);
      s[k] = t.c;
    }
    return s;
  }

  void emit_finite(const std::vector<StageTerm>& terms, int M, Lead lead, const Coef& c1) {
    Raw r;
    r.frame = frame;
    r.m = M;
    r.psi = prefix_series(terms, M);
    r.psi.resize(std::max(r.psi.size(), total_len(M, 0)));
    r.exact = true;
    r.lead = lead;
    r.c1 = c1;
    out->push_back(std::move(r));
  }

  void stage(const CoefPoly& Q0, std::vector<StageTerm> terms, Rat E, int M, int depth, Lead lead, Coef c1) {
    int ypow = 0;
    CoefPoly Q = Q0.strip_y(&ypow);
    bool first = terms.empty();
    if (ypow > 0) emit_finite(terms, M, first ? Lead::XDominant : lead, first ? Coef() : c1);
    for (const Edge& e : lower_edges(Q)) {
      Rat gamma(e.q, e.d);
      Rat gamma_x = gamma / M;  // exponent step in x units
      std::vector<RealRoot> roots = real_roots_coef(e.poly, precision);
      for (const RealRoot& root : roots) {
        Coef c = root.coef();
        if (c.is_zero()) continue;
        Lead l = lead;
        Coef lead_c = c1;
        if (first) {
          l = classify(gamma, c);
          lead_c = c;
          if (x_frame ? l == Lead::YDominant : l != Lead::XDominant) continue;
        }
        CoefPoly next = substitute(Q, e, c, root.multiplicity);
        std::vector<StageTerm> nt = terms;
        Rat ne = E + gamma_x;
        nt.push_back({ne, c});
        int nm = M * e.d;
        if (root.multiplicity == 1) {
          emit_regular(next, nt, ne, nm, l, lead_c);
        } else {
          if (depth + 1 > kMaxDepth) throw Error(Errc::TruncationInsufficient, "Newton-Puiseux recursion depth exceeded");
          stage(next, nt, ne, nm, depth + 1, l, lead_c);
        }
      }
    }
  }

  // x1^(-d v) Q(x1^d, x1^q (c + y1))
  CoefPoly substitute(const CoefPoly& Q, const Edge& e, const Coef& c, int mult) const {
    long emin = static_cast<long>(e.d) * e.i0 + static_cast<long>(e.q) * e.j0;
    auto binom = binomials(std::max(Q.deg_y(), 0));
    auto cp = powers(c, std::max(Q.deg_y(), 0));
    CoefPoly r;
    for (int i = 0; i <= Q.deg_x(); ++i) {
      for (int j = 0; j <= Q.deg_y(); ++j) {
        if (!Q.present(i, j)) continue;
        long ex = static_cast<long>(e.d) * i + static_cast<long>(e.q) * j - emin;
        for (int l = 0; l <= j; ++l) {
          Coef v = Q.at(i, j) * Coef(binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]) * cp[static_cast<std::size_t>(j - l)];
          r.set(static_cast<int>(ex), l, r.at(static_cast<int>(ex), l) + v);
        }
      }
    }
    // E(c + y) vanishes to order mult at y = 0
    for (int l = 0; l < mult; ++l) r.set(0, l, Coef());
    return r;
  }

  void emit_regular(const CoefPoly& Q, const std::vector<StageTerm>& terms, const Rat& E, int M, Lead lead, const Coef& c1) {
    auto cont = std::make_shared<Continuation>();
    cont->q = Q;
    cont->m = M;
    Rat a = E * M;
    cont->a = static_cast<int>(a.get_num().get_si());
    cont->prefix = prefix_series(terms, M);
    cont->precision = precision;
    Raw r;
    r.frame = frame;
    r.m = M;
    fill_psi(*cont, total_len(M, cont->a), r.psi);
    r.cont = cont;
    r.lead = lead;
    r.c1 = c1;
    // branch is finite when Q(t, 0) vanishes identically
    bool finite = true;
    for (int i = 0; i <= Q.deg_x() && finite; ++i) finite = !Q.present(i, 0);
    r.exact = finite && std::all_of(r.psi.begin(), r.psi.end(), [](const Coef& v) { return v.is_exact(); });
    out->push_back(std::move(r));
  }
};

Direction rotate_dir(Direction d, int r) { return static_cast<Direction>((static_cast<int>(d) + r) % 4); }

Direction frame_direction(const Raw& raw) {
  if (raw.lead != Lead::Diagonal) return Direction::E;
  int s = raw.c1.sign();
  for (std::size_t k = 0; k < raw.psi.size(); ++k) {
    Coef h = s > 0 ? raw.psi[k] : -raw.psi[k];
    if (k == static_cast<std::size_t>(raw.m)) h = h - Coef(1L);
    if (h.is_zero()) continue;
    if (h.sign() < 0) return Direction::E;
    return s > 0 ? Direction::N : Direction::S;
  }
  return Direction::E;
}

bool conj_match(const Raw& a, const Raw& b, bool odd) {
  if (a.m != b.m) return false;
  std::size_t n = std::min(a.psi.size(), b.psi.size());
  for (std::size_t k = 0; k < n; ++k) {
    bool flip = odd ? (k % 2 == 0) : (k % 2 == 1);
    Coef pred = flip ? -a.psi[k] : a.psi[k];
    if (!compatible(pred, b.psi[k])) return false;
  }
  return true;
}

bool indistinguishable(const Raw& a, const Raw& b) {
  if (a.m != b.m || a.frame != b.frame) return false;
  std::size_t n = std::min(a.psi.size(), b.psi.size());
  for (std::size_t k = 0; k < n; ++k)
    if (!compatible(a.psi[k], b.psi[k])) return false;
  return true;
}

std::vector<Raw> expand_frames(const CoefPoly& base, int order, int precision) {
  std::vector<Raw> raws;
  for (int r = 0; r < 4; ++r) {
    CoefPoly P = base.rotate(r).strip_x();
    if (P.present(0, 0)) continue;
    P.set(0, 0, Coef());
    Expander ex{order, precision, r, r % 2 == 0, &raws};
    ex.stage(P, {}, Rat(0), 1, 0, Lead::XDominant, Coef());
  }
  return raws;
}

}  // namespace

long double PuiseuxBranch::psi_at(long double t) const {
  long double s = 0;
  for (std::size_t k = psi.size(); k-- > 0;) s = s * t + static_cast<long double>(psi[k].to_double());
  return s;
}

std::pair<long double, long double> PuiseuxBranch::offset_at(long double t) const {
  long double x = std::pow(t, static_cast<long double>(m)), y = psi_at(t);
  switch (frame % 4) {
    case 0: return {x, y};
    case 1: return {-y, x};
    case 2: return {-x, -y};
    default: return {y, -x};
  }
}

int PuiseuxBranch::valuation() const {
  for (std::size_t k = 0; k < psi.size(); ++k)
    if (!psi[k].is_zero()) return static_cast<int>(k);
  return -1;
}

void PuiseuxBranch::extend(int order) {
  if (!continuation) return;
  std::size_t total = std::max(static_cast<std::size_t>(order) * static_cast<std::size_t>(m) + 1,
                               static_cast<std::size_t>(continuation->a) + 2);
  if (total <= psi.size()) return;
  fill_psi(*continuation, total, psi);
  tail_bound = 0;
  for (const Coef& c : psi) tail_bound = std::max(tail_bound, c.error_double());
}

const PuiseuxBranch& BranchSet::by_id(int id) const {
  for (const PuiseuxBranch& b : branches)
    if (b.id == id) return b;
  throw Error(Errc::DegenerateInput, "unknown branch id " + std::to_string(id));
}

const PuiseuxBranch& BranchSet::conjugate_of(const PuiseuxBranch& b) const { return by_id(b.conj_id); }

const PuiseuxBranch& conjugate_of(const BranchSet& set, const PuiseuxBranch& b) { return set.conjugate_of(b); }

BranchSet expand_branches(const BiPoly& p_in, const Point& center, int order, int precision_bits) {
  if (p_in.is_zero()) throw Error(Errc::DegenerateInput, "zero curve");
  if (order < 1) throw Error(Errc::DegenerateInput, "order must be positive");
  BiPoly p = squarefree_part(p_in);
  BranchSet set;
  set.center = center;
  set.curve = p;
  set.order = order;
  set.radius = a_small_radius({p}, center);
  auto base = std::make_shared<const CoefPoly>(translate_to(p, center));
  if (!base->at(0, 0).is_zero()) return set;

  std::vector<Raw> raws;
  for (int ord = order;; ord *= 2) {
    raws = expand_frames(*base, ord, precision_bits);
    bool separated = true;
    for (std::size_t i = 0; i < raws.size() && separated; ++i)
      for (std::size_t j = i + 1; j < raws.size() && separated; ++j) separated = !indistinguishable(raws[i], raws[j]);
    if (separated) break;
    if (ord * 2 > 96) throw Error(Errc::TruncationInsufficient, "branches not separated at the maximal order");
  }

  std::vector<int> partner(raws.size(), -1);
  for (std::size_t i = 0; i < raws.size(); ++i) {
    if (partner[i] >= 0) continue;
    const Raw& a = raws[i];
    bool odd = a.m % 2 == 1;
    std::vector<std::size_t> cands;
    for (std::size_t j = 0; j < raws.size(); ++j) {
      if (j == i || partner[j] >= 0) continue;
      const Raw& b = raws[j];
      int want = odd ? (a.frame + 2) % 4 : a.frame;
      if (b.frame != want) continue;
      if (conj_match(a, b, odd)) cands.push_back(j);
    }
    if (cands.size() != 1)
      throw Error(Errc::TruncationInsufficient, cands.empty() ? "conjugate branch not found" : "conjugate branch ambiguous");
    partner[i] = static_cast<int>(cands[0]);
    partner[cands[0]] = static_cast<int>(i);
  }

  for (std::size_t i = 0; i < raws.size(); ++i) {
    Raw& r = raws[i];
    PuiseuxBranch b;
    b.id = static_cast<int>(i);
    b.frame = r.frame;
    b.m = r.m;
    b.direction = rotate_dir(frame_direction(r), r.frame);
    b.psi = std::move(r.psi);
    b.exact = r.exact;
    for (const Coef& c : b.psi) b.tail_bound = std::max(b.tail_bound, c.error_double());
    b.radius = set.radius;
    b.conj_id = partner[i];
    b.sign_chart = partner[i] > static_cast<int>(i) ? 1 : -1;
    b.center = center;
    b.curve = p;
    b.frame_curve = std::make_shared<const CoefPoly>(base->rotate(r.frame));
    b.continuation = r.cont;
    set.branches.push_back(std::move(b));
  }
  return set;
}

// ---------------------------------------------------------------- A-small radius

namespace {

Rat coef_abs_lower(const Coef& c) {
  if (c.is_exact()) return abs(c.exact());
  Rat lo = abs(c.ball().mid_rat()) - c.ball().err_rat();
  return lo > 0 ? lo : Rat(0);
}

Rat coef_abs_upper(const Coef& c) {
  if (c.is_exact()) return abs(c.exact());
  return abs(c.ball().mid_rat()) + c.ball().err_rat();
}

Rat tiny_threshold(const Point& center) {
  if (center.is_exact()) return Rat(0);
  Rat t = 1;
  mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), 100);
  return t;
}

std::vector<BiPoly> translated_basis(const std::vector<BiPoly>& curves, const Point& center, bool with_diagonals) {
  auto [a, b] = rational_center(center);
  std::vector<BiPoly> polys;
  for (const BiPoly& c : curves)
    if (!c.is_zero() && !c.is_constant()) polys.push_back(c.translate(a, b));
  if (with_diagonals) {
    polys.push_back(BiPoly::y() - BiPoly::x());
    polys.push_back(BiPoly::y() + BiPoly::x());
  }
  return coprime_basis(polys);
}

// Sup norms of the critical points that govern the branch structure.
std::vector<Rat> critical_norms(const std::vector<BiPoly>& curves, const Point& center) {
  std::vector<BiPoly> basis = translated_basis(curves, center, true);
  Rat tiny = tiny_threshold(center);
  std::vector<Rat> norms;
  auto consider = [&](const Point& pt, int triangle) {
    // triangle: 0 any, 1 east/west (|x| >= |y|), 2 north/south
    Rat ax = coef_abs_lower(pt.x), ay = coef_abs_lower(pt.y);
    Rat ux = coef_abs_upper(pt.x), uy = coef_abs_upper(pt.y);
    if (triangle == 1 && ux < ay) return;
    if (triangle == 2 && uy < ax) return;
    Rat n = std::max(ux, uy);
    if (n <= tiny) return;
    norms.push_back(std::max(ax, ay));
  };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BiPoly& f = basis[i];
    BiPoly fy = f.dy(), fx = f.dx();
    if (!fy.is_zero() && !fy.is_constant())
      for (const Point& pt : common_real_zeros(f, fy)) consider(pt, 1);
    if (!fx.is_zero() && !fx.is_constant())
      for (const Point& pt : common_real_zeros(f, fx)) consider(pt, 2);
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (const Point& pt : common_real_zeros(f, basis[j])) consider(pt, 0);
  }
  return norms;
}

Rat round_down_dyadic(const Rat& v) {
  if (v <= 0) return Rat(0);
  Rat scaled = v;
  unsigned k = 0;
  while (scaled < 16) {
    scaled *= 2;
    ++k;
  }
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rat r(fl);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), k);
  return r;
}

}  // namespace

Rat a_small_radius(const std::vector<BiPoly>& curves, const Point& center) {
  Rat eps(1, 2);
  for (const Rat& n : critical_norms(curves, center)) eps = std::min(eps, Rat(n / 2));
  if (!center.is_exact()) {
    // leave room for the distance between the center and its rational stand-in
    Rat slack = 0;
    if (!center.x.is_exact()) slack = std::max(slack, center.x.ball().err_rat());
    if (!center.y.is_exact()) slack = std::max(slack, center.y.ball().err_rat());
    eps -= slack;
  }
  return round_down_dyadic(eps);
}

bool is_a_small(const std::vector<BiPoly>& curves, const Rat& radius, const Point& center) {
  for (const Rat& n : critical_norms(curves, center))
    if (n < radius) return false;
  return true;
}

}  // namespace graphoid
