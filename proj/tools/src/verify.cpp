#include <algorithm>
#include <cmath>

#include "graphoid/error.hpp"
#include "graphoid/limits.hpp"
#include "internal.hpp"

namespace graphoid::cli {

namespace {

// Fiber tolerance of the battery; the CLI --tol applies to `fiber` only.
constexpr double kVerifyFiberTol = 1e-2;
constexpr int kRegularPoints = 20;

struct Law {
  explicit Law(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0, failed = 0, errors = 0;
  std::string detail;

  void pass() { ++checked; }
  void fail(const std::string& what) {
    ++checked;
    ++failed;
    if (detail.empty()) detail = what;
  }
  void error(const Error& e, const std::string& where) {
    ++errors;
    if (detail.empty()) detail = where + ": " + e.qualified_code() + ": " + e.what();
  }
  std::string status() const {
    if (failed) return "FAIL";
    if (errors) return "ERROR";
    return checked ? "PASS" : "SKIP";
  }
  Json json() const {
    Json j;
    j["name"] = name;
    j["status"] = status();
    j["checked"] = checked;
    j["failed"] = failed;
    j["errors"] = errors;
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }
};

std::string at(const Point& z) { return "(" + z.x.to_decimal(8) + ", " + z.y.to_decimal(8) + ")"; }

void check_branches(const RunConfig& cfg, const Family& F, const Point& z, Law& even, Law& conj) {
  for (const BiPoly& curve : default_curves(F)) {
    BranchSet set;
    try {
      set = expand_branches(curve, z, cfg.order, cfg.precision_bits);
    } catch (const Error& e) {
      even.error(e, curve.to_string() + " at " + at(z));
      continue;
    }
    if (set.branches.empty()) continue;
    if (involution_ok(set)) {
      even.pass();
    } else {
      even.fail(curve.to_string() + " at " + at(z) + ": " + std::to_string(set.branches.size()) + " branches");
    }
    for (const auto& b : set.branches) {
      for (const auto& f : F.members) {
        try {
          if (conjugate_limits_equal(f, set, b)) {
            conj.pass();
          } else {
            conj.fail(f.to_string() + " on branch " + std::to_string(b.id) + " of " + curve.to_string());
          }
        } catch (const Error& e) {
          if (e.code() != Errc::IndeterminateOnBranch) conj.error(e, f.to_string() + " on " + curve.to_string());
        }
      }
    }
  }
}

void check_fiber(const RunConfig& cfg, const Family& F, const Point& z, Law& law) {
  try {
    Fiber fb = fiber(F, z, kVerifyFiberTol, cfg.order);
    for (const auto& a : fb.anchors) {
      std::vector<double> t;
      for (const auto& v : a.values) t.push_back(v.to_double());
      double d = distance_to_samples(t, fb.samples);
      if (d > kVerifyFiberTol) {
        law.fail("anchor of member " + std::to_string(a.member) + " at " + at(z) + " is " + std::to_string(d) +
                 " from the fiber");
        return;
      }
    }
    law.pass();
  } catch (const Error& e) {
    if (e.code() == Errc::NoConvergence) {
      law.fail(at(z) + ": " + e.what());
    } else {
      law.error(e, at(z));
    }
  }
}

void check_boundary(const RunConfig& cfg, const Family& F, const Point& z, Rng& rng, Law& mono, Law& deg, Law& probe) {
  Rat r = a_small_radius(F.level_curves(), z) / 2;
  BoundaryMapSamples s;
  try {
    s = sample_boundary_map(F, z, r, cfg.samples);
  } catch (const Error& e) {
    mono.error(e, at(z));
    return;
  }
  MonotoneReport mr = check_monotone(s);
  if (mr.ok) {
    mono.pass();
  } else {
    mono.fail(at(z) + ": " + mr.first_violation);
  }

  for (std::size_t k = 0; k < F.size(); ++k) {
    try {
      SampledCircleMap m = circle_map(s, k);
      ParityReport base = z2_degree(m, std::nullopt, rng);
      bool ok = (winding_degree(m) % 2 != 0) == base.odd;
      for (int i = 0; i < 9 && ok; ++i) ok = z2_degree(m, std::nullopt, rng).odd == base.odd;
      SampledCircleMap fine = circle_map(sample_boundary_map(F, z, r, 4 * cfg.samples, false), k);
      ok = ok && z2_degree(fine, std::nullopt, rng).odd == base.odd;
      if (ok) {
        deg.pass();
      } else {
        deg.fail("member " + std::to_string(k) + " at " + at(z));
      }
    } catch (const Error& e) {
      deg.error(e, "member " + std::to_string(k) + " at " + at(z));
    }
  }

  try {
    BoundaryMapSamples refined;
    for (const auto& cls : coherence_classes(F, s, 2, &refined)) {
      ParityReport p = parity_probe(refined, cls, rng);
      if (p.odd) {
        probe.fail(at(z) + ": " + std::to_string(p.preimage_count) + " crossings");
      } else {
        probe.pass();
      }
    }
  } catch (const Error& e) {
    probe.error(e, at(z));
  }
}

void check_additivity(const RunConfig& cfg, const Family& F, const std::vector<Point>& sing, Rng& rng, Law& law) {
  if (sing.empty()) return;
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const Point& s : sing) {
    lo_x = std::min(lo_x, s.x.to_double());
    hi_x = std::max(hi_x, s.x.to_double());
    lo_y = std::min(lo_y, s.y.to_double());
    hi_y = std::max(hi_y, s.y.to_double());
  }
  // dyadic center near the middle of the bounding box
  auto dyadic = [](double v) { return Rat(static_cast<long>(std::round(v * 64)), 64); };
  Point c{Coef(dyadic((lo_x + hi_x) / 2)), Coef(dyadic((lo_y + hi_y) / 2))};
  Rat R = enclosing_radius(F, c);
  for (std::size_t k = 0; k < F.size(); ++k) {
    try {
      AdditivityReport a = additivity_check(F, c, R, k, rng, std::max<std::size_t>(cfg.samples, 1024));
      if (a.consistent) {
        law.pass();
      } else {
        law.fail("member " + std::to_string(k) + ": outer parity differs from the inner xor");
      }
    } catch (const Error& e) {
      law.error(e, "member " + std::to_string(k));
    }
  }
}

void check_regular(const RunConfig& cfg, const Family& F, Rng& rng, Law& law) {
  std::uniform_int_distribution<long> num(-200, 200);
  for (int i = 0; i < kRegularPoints; ++i) {
    Rat a(num(rng), 97), b(num(rng), 89);
    a.canonicalize();
    b.canonicalize();
    Point z{Coef(a), Coef(b)};
    if (!F.is_regular(z)) continue;
    try {
      Fiber fb = fiber(F, z, cfg.tol, cfg.order);
      std::vector<double> direct = F.eval(a.get_d(), b.get_d());
      bool ok = !fb.singular && fb.points.size() == 1;
      for (std::size_t k = 0; ok && k < F.size(); ++k) ok = chordal_dist(fb.points[0][k].to_double(), direct[k]) <= 1e-9;
      if (ok) {
        law.pass();
      } else {
        law.fail("fiber at " + at(z) + " is not the singleton F(z)");
      }
    } catch (const Error& e) {
      law.error(e, at(z));
    }
  }
}

void check_mobius(const RunConfig& cfg, const Family& F, Law& law) {
  for (const auto& f : F.members) {
    try {
      mobius_center(f);
    } catch (const Error&) {
      continue;
    }
    try {
      MobiusReport m = mobius_check(f, Rat(1, 2), cfg.samples);
      if (m.ok) {
        law.pass();
      } else {
        law.fail(f.to_string() + ": antipodal " + std::to_string(m.max_antipodal) + ", winding " +
                 std::to_string(m.winding));
      }
    } catch (const Error& e) {
      law.error(e, f.to_string());
    }
  }
}

}  // namespace

Outcome cmd_verify(const RunConfig& cfg, const Family& F) {
  Rng rng(cfg.seed);
  Law even{"even_branches"}, conj{"conjugate_limits"}, fib{"fiber_convergence"}, mono{"monotone_segments"},
      deg{"degree_parity"}, probe{"parity_probe"}, add{"additivity"}, reg{"regular_fibers"}, mob{"mobius"};
  std::vector<Point> sing = F.singular_points(cfg.precision_bits);
  for (const Point& z : sing) {
    check_branches(cfg, F, z, even, conj);
    check_fiber(cfg, F, z, fib);
    check_boundary(cfg, F, z, rng, mono, deg, probe);
  }
  check_additivity(cfg, F, sing, rng, add);
  check_regular(cfg, F, rng, reg);
  check_mobius(cfg, F, mob);

  Outcome o;
  o.report["schema"] = 1;
  o.report["command"] = "verify";
  Json fam = Json::array();
  for (const auto& f : F.members) fam.push_back(f.to_string());
  o.report["family"] = std::move(fam);
  o.report["seed"] = cfg.seed;
  Json pts = Json::array();
  for (const Point& z : sing) pts.push_back(point_json(z));
  o.report["singular_points"] = std::move(pts);
  Json laws = Json::array();
  bool any_error = false;
  for (const Law* l : {&even, &conj, &fib, &mono, &deg, &probe, &add, &reg, &mob}) {
    laws.push_back(l->json());
    o.violation = o.violation || l->failed > 0;
    any_error = any_error || l->errors > 0;
  }
  o.report["laws"] = std::move(laws);
  o.report["ok"] = !o.violation && !any_error;
  o.incomplete = any_error;
  return o;
}

}  // namespace graphoid::cli
