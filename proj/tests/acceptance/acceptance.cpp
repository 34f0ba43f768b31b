// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphoid/algebra/elimination.hpp"
#include "graphoid/cli/cli.hpp"
#include "graphoid/degree.hpp"
#include "graphoid/error.hpp"
#include "graphoid/limits.hpp"
#include "oracles.hpp"

using namespace graphoid;
using namespace graphoid::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

bool conjugation_ok(const BranchSet& set) {
  if (set.branches.size() % 2 != 0) return false;
  for (const auto& b : set.branches) {
    const PuiseuxBranch& c = set.conjugate_of(b);
    if (c.id == b.id || set.conjugate_of(c).id != b.id) return false;
  }
  return true;
}

bool squarefree(const BiPoly& p) { return squarefree_part(p) == p.primitive(); }

Outcome cusp_branches() {
  Outcome o;
  BranchSet set = expand_branches(poly("y^2 - x^3"), Point::origin());
  o.require(set.branches.size() == 2, std::to_string(set.branches.size()) + " branches");
  if (!o.ok) return o;
  std::multiset<int> signs;
  for (const auto& b : set.branches) {
    o.require(b.direction == Direction::E, "direction " + to_string(b.direction));
    o.require(b.m == 2, "m = " + std::to_string(b.m));
    o.require(b.valuation() == 3, "leading exponent " + std::to_string(b.valuation()) + "/2");
    if (!o.ok) return o;
    double c = b.psi[3].to_double();
    o.require(std::fabs(std::fabs(c) - 1) <= 1e-12, "leading coefficient " + std::to_string(c));
    signs.insert(c > 0 ? 1 : -1);
  }
  o.require(signs == std::multiset<int>{-1, 1}, "coefficients do not have opposite signs");
  o.require(set.conjugate_of(set.branches[0]).id == set.branches[1].id, "not a conjugate pair");
  return o;
}

Outcome odd_conjugation() {
  Outcome o;
  BranchSet set = expand_branches(poly("x - y^3"), Point::origin());
  o.require(set.branches.size() == 2, std::to_string(set.branches.size()) + " branches");
  if (!o.ok) return o;
  const PuiseuxBranch& a = set.branches[0];
  const PuiseuxBranch& b = set.conjugate_of(a);
  o.require(b.id != a.id, "not a conjugate pair");
  std::set<Direction> dirs{a.direction, b.direction};
  o.require(dirs == std::set<Direction>{Direction::N, Direction::S}, "directions are not north and south");
  // the conjugates sit on opposite sides exactly when the denominator is odd
  bool opposite = (static_cast<int>(a.direction) + 2) % 4 == static_cast<int>(b.direction);
  o.require(opposite == (a.m % 2 == 1), "side rule fails for m = " + std::to_string(a.m));
  // the domains share only the center: the y coordinate keeps a strict sign
  for (const PuiseuxBranch* br : {&a, &b}) {
    int side = br->direction == Direction::N ? 1 : -1;
    for (int k = 1; k <= 200; ++k) {
      long double t = std::pow(static_cast<long double>(br->radius.get_d()), 1.0L / br->m) * k / 200;
      auto [x, y] = br->offset_at(t);
      o.require(y * side > 0, "branch point on the wrong side");
      o.require(std::fabs(x - y * y * y) < 1e-12, "branch point off the curve");
    }
  }
  return o;
}

Outcome even_branch_law() {
  Outcome o;
  std::vector<std::pair<std::string, BiPoly>> curves;
  for (const auto& c : named_curves()) curves.emplace_back(c.name, poly(c.text));
  std::mt19937_64 rng(3);
  int random = 0;
  while (random < 50) {
    BiPoly p = random_poly(rng, 4, true);
    if (!squarefree(p)) continue;
    curves.emplace_back("random " + p.to_string(), p);
    ++random;
  }
  for (const auto& [name, p] : curves) {
    BranchSet set = expand_branches(p, Point::origin());
    o.require(conjugation_ok(set), name + ": " + std::to_string(set.branches.size()) + " branches");
    Rat r = a_small_radius({p}) / 2;
    int oracle = polar_sign_changes(p, 0, 0, r.get_d());
    o.require(oracle == static_cast<int>(set.branches.size()),
              name + ": oracle " + std::to_string(oracle) + " vs " + std::to_string(set.branches.size()));
    if (!o.ok) return o;
  }
  o.note = std::to_string(curves.size()) + " curves";
  return o;
}

Outcome conjugate_limit_law() {
  Outcome o;
  std::mt19937_64 rng(11);
  int pairs = 0, attempts = 0;
  while (pairs < 100 && attempts < 2000) {
    ++attempts;
    BiPoly p = random_poly(rng, 3, false), q = random_poly(rng, 3, false);
    RationalFn f(p, q);
    if (f.is_constant()) continue;
    BiPoly curve = random_poly(rng, 4, true);
    BranchSet set;
    try {
      set = expand_branches(curve, Point::origin());
    } catch (const Error&) {
      continue;
    }
    if (set.branches.empty()) continue;
    bool certified = true, equal = true;
    for (const auto& b : set.branches) {
      try {
        certified = certified && limit_along(f, b).certified;
        equal = equal && conjugate_limits_equal(f, set, b);
      } catch (const Error&) {
        certified = false;
      }
    }
    if (!certified) continue;
    ++pairs;
    o.require(equal, "f = " + f.to_string() + " on " + curve.to_string());
  }
  o.require(pairs == 100, "only " + std::to_string(pairs) + " certified pairs");
  if (o.ok) o.note = std::to_string(pairs) + " pairs from " + std::to_string(attempts) + " draws";
  return o;
}

Outcome fibers() {
  Outcome o;
  Fiber cot = fiber(family({"x/y"}), Point::origin(), 0.01);
  double worst = 0;
  for (int k = 0; k < 10000; ++k) {
    double u = (k + 0.5) / 10000;
    worst = std::max(worst, distance_to_samples({from_turn(u)}, cot.samples));
  }
  o.require(worst <= 0.01, "x/y fiber misses the line by " + std::to_string(worst));

  Fiber arc = fiber(family({"(x*y)/(x^2+y^2)"}), Point::origin(), 1e-6);
  double lo = 1e300, hi = -1e300;
  for (const auto& v : arc.samples.values) {
    lo = std::min(lo, v[0]);
    hi = std::max(hi, v[0]);
  }
  o.require(std::fabs(lo + 0.5) <= 1e-6 && std::fabs(hi - 0.5) <= 1e-6,
            "arc endpoints " + std::to_string(lo) + ", " + std::to_string(hi));
  for (int k = 0; k <= 1000; ++k) {
    double v = -0.5 + k / 1000.0;
    o.require(distance_to_samples({v}, arc.samples) <= 1e-6, "arc misses " + std::to_string(v));
  }

  std::mt19937_64 rng(5);
  Family F = family({"x/y", "(x^2 - y)/(x + y^2 + 1)", "(x*y - 1)/(x - 2*y)"});
  int done = 0;
  while (done < 1000) {
    Rat a = random_rat(rng, 500, 97), b = random_rat(rng, 500, 89);
    Point z{Coef(a), Coef(b)};
    if (!F.is_regular(z)) continue;
    ++done;
    Fiber fb = fiber(F, z, 1e-6);
    o.require(!fb.singular && fb.points.size() == 1, "regular fiber is not a point");
    if (!o.ok) return o;
    for (std::size_t k = 0; k < F.size(); ++k) {
      long double x = a.get_d(), y = b.get_d();
      double direct = static_cast<double>(F.members[k].eval(x, y));
      o.require(chordal_dist(fb.points[0][k].to_double(), direct) <= 1e-9, "regular fiber value off");
    }
  }
  return o;
}

Outcome monotone_law() {
  Outcome o;
  int points = 0;
  for (const auto& nf : corpus_families()) {
    for (const Point& z : nf.family.singular_points()) {
      Rat r = a_small_radius(nf.family.level_curves(), z) / 2;
      MonotoneReport m = check_monotone(sample_boundary_map(nf.family, z, r, 1024));
      ++points;
      o.require(m.ok, nf.name + ": " + m.first_violation);
    }
  }
  if (o.ok) o.note = std::to_string(points) + " singular points";
  return o;
}

Outcome parity_laws() {
  Outcome o;
  Family F = family({"x/y"});
  Rng rng(0);
  SampledCircleMap m = circle_map(sample_boundary_map(F, Point::origin(), Rat(1, 4), 1024), 0);
  ParityReport base = z2_degree(m, std::nullopt, rng);
  o.require(base.preimage_count == 2 && !base.odd, "preimage count " + std::to_string(base.preimage_count));
  long w = winding_degree(m);
  o.require(std::labs(w) == 2, "winding " + std::to_string(w));
  for (int i = 0; i < 10; ++i) o.require(z2_degree(m, std::nullopt, rng).odd == base.odd, "parity depends on the value");
  SampledCircleMap fine = circle_map(sample_boundary_map(F, Point::origin(), Rat(1, 4), 4096), 0);
  o.require(z2_degree(fine, std::nullopt, rng).odd == base.odd, "parity changes at 4096 samples");
  return o;
}

Outcome additivity_law() {
  Outcome o;
  Rng rng(0);
  int families = 0, classes = 0;
  for (const auto& nf : corpus_families()) {
    const Family& F = nf.family;
    std::vector<Point> sing = F.singular_points();
    if (sing.empty() || sing.size() > 3) continue;
    ++families;
    double sx = 0, sy = 0, d = 0;
    for (const Point& s : sing) {
      sx += s.x.to_double() / static_cast<double>(sing.size());
      sy += s.y.to_double() / static_cast<double>(sing.size());
    }
    Point c{Coef(Rat(static_cast<long>(std::round(sx * 64)), 64)), Coef(Rat(static_cast<long>(std::round(sy * 64)), 64))};
    for (const Point& s : sing)
      d = std::max({d, std::fabs(s.x.to_double() - c.x.to_double()), std::fabs(s.y.to_double() - c.y.to_double())});
    Rat R(static_cast<long>(std::ceil((d + 0.5) * 4)), 4);
    for (std::size_t k = 0; k < F.size(); ++k) {
      AdditivityReport a = additivity_check(F, c, R, k, rng);
      o.require(a.consistent, nf.name + ": outer parity differs from the inner xor for member " + std::to_string(k));
    }
    for (const Point& z : sing) {
      Rat r = a_small_radius(F.level_curves(), z) / 2;
      BoundaryMapSamples refined;
      for (const auto& cls : coherence_classes(F, sample_boundary_map(F, z, r, 1024), 2, &refined)) {
        ++classes;
        ParityReport p = parity_probe(refined, cls, rng);
        o.require(!p.odd, nf.name + ": odd probe with " + std::to_string(p.preimage_count) + " crossings");
      }
    }
  }
  o.require(families >= 10, "only " + std::to_string(families) + " families");
  if (o.ok) o.note = std::to_string(families) + " families, " + std::to_string(classes) + " classes";
  return o;
}

Outcome obstruction() {
  Outcome o;
  Rng rng(0);
  ObstructionReport r = obstruction_report(family({"x/y"}), Point::origin(), Rat(1), 0, rng);
  o.require(r.applies, "report does not apply");
  o.require(r.radial_winding == 1 || r.radial_winding == -1, "radial winding " + std::to_string(r.radial_winding));
  o.require(r.radial_odd && !r.inner_odd && r.obstruction, "no parity mismatch reported");
  return o;
}

Outcome mobius() {
  Outcome o;
  const char* fs[] = {"x/y", "(x-1)/(y+2)", "(x+3)/(y-1/2)", "(2*x-1)/(2*y-5)", "(x+7/3)/(y+4)"};
  for (const char* text : fs) {
    MobiusReport m = mobius_check(parse_rational_fn(text), Rat(1, 2));
    o.require(m.max_antipodal <= 1e-9, std::string(text) + ": antipodal gap " + std::to_string(m.max_antipodal));
    o.require(std::labs(m.winding) == 2, std::string(text) + ": winding " + std::to_string(m.winding));
    o.require(m.ok, std::string(text) + ": not a double cover");
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string path = std::string(GRAPHOID_TEST_DATA) + "/corpus/two_lines.txt";
  std::string runs[2];
  for (auto& text : runs) {
    const char* argv[] = {"graphoid", "verify", path.c_str(), "--seed", "0"};
    std::ostringstream out, err;
    int code = cli::run(5, argv, out, err);
    o.require(code == cli::kExitOk, "verify exited with " + std::to_string(code) + ": " + err.str());
    text = out.str();
  }
  o.require(!runs[0].empty() && runs[0] == runs[1], "reports differ");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cusp branches", 1, cusp_branches},
      {2, "odd-parity conjugation", 1, odd_conjugation},
      {3, "even-branch law", 60, even_branch_law},
      {4, "conjugate-limit law", 120, conjugate_limit_law},
      {5, "fibers", 30, fibers},
      {6, "monotone-segment law", 60, monotone_law},
      {7, "parity laws", 10, parity_laws},
      {8, "additivity and parity probe", 120, additivity_law},
      {9, "obstruction report", 10, obstruction},
      {10, "Mobius double cover", 10, mobius},
      {11, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o.ok = false;
      o.note = e.qualified_code() + ": " + e.what();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.budget_s > 0 && s > c.budget_s) {
      o.ok = false;
      o.note = "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    failed += !o.ok;
    std::printf("%s  [%2d] %-28s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, o.note.empty() ? "" : "  ",
                o.note.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
