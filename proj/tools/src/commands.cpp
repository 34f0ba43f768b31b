#include <algorithm>
#include <cmath>
#include <ostream>

#include "graphoid/error.hpp"
#include "graphoid/limits.hpp"
#include "internal.hpp"

namespace graphoid::cli {

namespace {

Point center_of(const RunConfig& cfg) {
  if (!cfg.point) return Point::origin();
  return {Coef(cfg.point->first), Coef(cfg.point->second)};
}

const RationalFn& member_of(const RunConfig& cfg, const Family& F) {
  if (cfg.member >= F.size())
    throw Error(Errc::InputError, "member " + std::to_string(cfg.member) + " out of range (family has " +
                                      std::to_string(F.size()) + ")");
  return F.members[cfg.member];
}

Json header(const RunConfig& cfg, const Family& F) {
  Json j;
  j["schema"] = 1;
  j["command"] = cfg.command;
  Json fam = Json::array();
  for (const auto& f : F.members) fam.push_back(f.to_string());
  j["family"] = std::move(fam);
  if (cfg.chart != ChartFlip::None) j["chart"] = to_string(cfg.chart);
  return j;
}

Rat default_small_radius(const RunConfig& cfg, const Family& F, const Point& z) {
  if (cfg.radius) return *cfg.radius;
  return a_small_radius(F.level_curves(), z) / 2;
}

}  // namespace

bool involution_ok(const BranchSet& set) {
  if (set.branches.size() % 2 != 0) return false;
  for (const auto& b : set.branches) {
    const PuiseuxBranch& c = set.conjugate_of(b);
    if (c.id == b.id || set.conjugate_of(c).id != b.id) return false;
  }
  return true;
}

std::vector<BiPoly> default_curves(const Family& F) {
  std::vector<BiPoly> out;
  for (const BiPoly& c : F.level_curves()) {
    if (c.is_constant()) continue;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

Rat enclosing_radius(const Family& F, const Point& center) {
  double d = 0;
  for (const Point& s : F.singular_points())
    d = std::max({d, std::fabs(s.x.to_double() - center.x.to_double()), std::fabs(s.y.to_double() - center.y.to_double())});
  Rat r(static_cast<long>(std::ceil((d + 0.5) * 4)), 4);
  r.canonicalize();
  return r;
}

Outcome cmd_branches(const RunConfig& cfg, const Family& F) {
  const RationalFn& f = member_of(cfg, F);
  BiPoly curve = cfg.level == "inf" ? f.q() : f.level_curve(parse_rat(cfg.level));
  if (curve.is_constant()) throw Error(Errc::InputError, "level curve is constant");
  Point z = center_of(cfg);
  BranchSet set = expand_branches(curve, z, cfg.order, cfg.precision_bits);
  Outcome o;
  o.report = header(cfg, F);
  o.report["member"] = cfg.member;
  o.report["level"] = cfg.level;
  o.report["curve"] = set.curve.to_string();
  o.report["center"] = point_json(z);
  o.report["radius"] = set.radius.get_str();
  o.report["count"] = set.branches.size();
  Json bs = Json::array();
  for (const auto& b : set.branches) bs.push_back(branch_json(b));
  o.report["branches"] = std::move(bs);
  o.violation = !involution_ok(set);
  o.report["even_involution"] = !o.violation;
  return o;
}

Outcome cmd_limit(const RunConfig& cfg, const Family& F) {
  Point z = center_of(cfg);
  std::vector<BiPoly> curves;
  if (!cfg.curve.empty()) {
    RationalFn c = parse_rational_fn(cfg.curve);
    if (!c.is_polynomial() || c.is_constant()) throw Error(Errc::InputError, "curve must be a nonconstant polynomial");
    curves.push_back(c.p());
  } else {
    curves = default_curves(F);
  }
  Outcome o;
  o.report = header(cfg, F);
  o.report["center"] = point_json(z);
  Json items = Json::array();
  for (const BiPoly& curve : curves) {
    BranchSet set = expand_branches(curve, z, cfg.order, cfg.precision_bits);
    for (const auto& b : set.branches) {
      for (std::size_t k = 0; k < F.size(); ++k) {
        Json it;
        it["function"] = F.members[k].to_string();
        it["member"] = k;
        it["curve"] = set.curve.to_string();
        it["branch"] = b.id;
        it["direction"] = to_string(b.direction);
        try {
          BranchLimit l = limit_along(F.members[k], b);
          it["value"] = value_json(l.value);
          it["leading_exponent"] = l.leading_exponent.get_str();
          it["certified"] = l.certified;
          bool eq = conjugate_limits_equal(F.members[k], set, b);
          it["conjugate_equal"] = eq;
          if (!eq) o.violation = true;
        } catch (const Error& e) {
          it["error"] = e.qualified_code();
          it["message"] = e.what();
        }
        items.push_back(std::move(it));
      }
    }
  }
  o.report["limits"] = std::move(items);
  return o;
}

Outcome cmd_fiber(const RunConfig& cfg, const Family& F) {
  Point z = center_of(cfg);
  Fiber fb = fiber(F, z, cfg.tol, cfg.order);
  Outcome o;
  o.report = header(cfg, F);
  o.report["point"] = point_json(z);
  o.report["singular"] = fb.singular;
  Json pts = Json::array();
  for (const auto& p : fb.points) {
    Json t = Json::array();
    for (const auto& v : p) t.push_back(value_json(v));
    pts.push_back(std::move(t));
  }
  o.report["points"] = std::move(pts);
  if (fb.singular) {
    o.report["radius"] = fb.radius.get_str();
    o.report["refinements"] = fb.refinements;
    o.report["hausdorff"] = fb.hausdorff;
    o.report["samples"] = fb.samples.size();
    Json arcs = Json::array();
    for (const auto& a : fb.arcs) {
      Json ja;
      ja["begin_mark"] = a.begin_mark;
      ja["end_mark"] = a.end_mark;
      Json ss = Json::array();
      for (const auto& s : a.samples) ss.push_back(tuple_json(s));
      ja["samples"] = std::move(ss);
      arcs.push_back(std::move(ja));
    }
    o.report["arcs"] = std::move(arcs);
    Json anchors = Json::array();
    for (const auto& a : fb.anchors) {
      Json ja;
      Json vals = Json::array();
      std::vector<double> t;
      for (const auto& v : a.values) {
        vals.push_back(value_json(v));
        t.push_back(v.to_double());
      }
      ja["values"] = std::move(vals);
      ja["member"] = a.member;
      ja["level"] = value_json(a.level);
      ja["branch_id"] = a.branch_id;
      ja["direction"] = to_string(a.direction);
      ja["residual"] = distance_to_samples(t, fb.samples);
      anchors.push_back(std::move(ja));
    }
    o.report["anchors"] = std::move(anchors);
    o.csv = csv_samples(fb.samples);
  } else {
    std::string row = "theta";
    for (std::size_t k = 0; k < F.size(); ++k) row += ",f" + std::to_string(k);
    row += "\n";
    for (const auto& v : fb.points.at(0)) row += "," + csv_value(v.to_double());
    o.csv = row + "\n";
  }
  return o;
}

Outcome cmd_degree(const RunConfig& cfg, const Family& F) {
  member_of(cfg, F);
  Point z = center_of(cfg);
  Rat r = default_small_radius(cfg, F, z);
  Rng rng(cfg.seed);
  BoundaryMapSamples s = sample_boundary_map(F, z, r, cfg.samples, false);
  SampledCircleMap m = circle_map(s, cfg.member);
  ParityReport pr = z2_degree(m, std::nullopt, rng);
  long w = winding_degree(m);
  Outcome o;
  o.report = header(cfg, F);
  o.report["member"] = cfg.member;
  o.report["center"] = point_json(z);
  o.report["radius"] = r.get_str();
  o.report["samples"] = s.size();
  o.report["parity"] = parity_json(pr);
  o.report["winding"] = w;
  o.violation = (w % 2 != 0) != pr.odd;
  o.report["winding_parity_agrees"] = !o.violation;
  o.csv = csv_samples(s);
  return o;
}

namespace {

Json additivity_json(const AdditivityReport& a) {
  Json j;
  j["center"] = point_json(a.center);
  j["radius"] = a.radius.get_str();
  j["coordinate"] = a.coordinate;
  j["outer"] = parity_json(a.outer);
  j["outer_winding"] = a.outer_winding;
  Json inner = Json::array();
  for (const auto& c : a.inner) {
    Json ji;
    ji["center"] = point_json(c.center);
    ji["radius"] = c.radius.get_str();
    ji["parity"] = parity_json(c.parity);
    ji["winding"] = c.winding;
    inner.push_back(std::move(ji));
  }
  j["inner"] = std::move(inner);
  j["inner_xor"] = a.inner_xor ? "odd" : "even";
  j["consistent"] = a.consistent;
  return j;
}

}  // namespace

Outcome cmd_additivity(const RunConfig& cfg, const Family& F) {
  member_of(cfg, F);
  Point c = center_of(cfg);
  Rat R = cfg.radius ? *cfg.radius : enclosing_radius(F, c);
  Rng rng(cfg.seed);
  AdditivityReport a = additivity_check(F, c, R, cfg.member, rng, cfg.samples);
  Outcome o;
  o.report = header(cfg, F);
  o.report["additivity"] = additivity_json(a);
  o.violation = !a.consistent;
  return o;
}

Outcome cmd_obstruction(const RunConfig& cfg, const Family& F) {
  member_of(cfg, F);
  Point c = center_of(cfg);
  Rat R = cfg.radius ? *cfg.radius : enclosing_radius(F, c);
  Rng rng(cfg.seed);
  ObstructionReport r = obstruction_report(F, c, R, cfg.member, rng, cfg.samples);
  Outcome o;
  o.report = header(cfg, F);
  o.report["applies"] = r.applies;
  o.report["radial_winding"] = r.radial_winding;
  o.report["radial_parity"] = r.radial_odd ? "odd" : "even";
  o.report["inner_parity"] = r.inner_odd ? "odd" : "even";
  o.report["obstruction"] = r.obstruction;
  o.report["additivity"] = additivity_json(r.additivity);
  o.report["verdict"] = r.verdict;
  o.violation = !r.additivity.consistent;
  return o;
}

Outcome cmd_mobius(const RunConfig& cfg, const Family& F) {
  const RationalFn& f = member_of(cfg, F);
  Rat r = cfg.radius ? *cfg.radius : Rat(1, 2);
  MobiusReport m = mobius_check(f, r, cfg.samples);
  Outcome o;
  o.report = header(cfg, F);
  o.report["function"] = f.to_string();
  o.report["center"] = point_json(m.center);
  o.report["radius"] = r.get_str();
  o.report["max_antipodal"] = m.max_antipodal;
  o.report["winding"] = m.winding;
  o.report["double_cover"] = m.ok;
  o.violation = !m.ok;
  return o;
}

int run(const RunConfig& cfg, const std::string& family_text, std::ostream& out, std::ostream& err) {
  try {
    Family F;
    for (const auto& f : parse_family(family_text)) F.members.push_back(flip_chart(f, cfg.chart));
    if (F.members.empty()) throw Error(Errc::InputError, "family file contains no functions");
    if (cfg.format == Format::Csv && cfg.command != "fiber" && cfg.command != "degree")
      throw Error(Errc::InputError, "csv output is available for fiber and degree only");
    Outcome o;
    if (cfg.command == "branches") o = cmd_branches(cfg, F);
    else if (cfg.command == "limit") o = cmd_limit(cfg, F);
    else if (cfg.command == "fiber") o = cmd_fiber(cfg, F);
    else if (cfg.command == "degree") o = cmd_degree(cfg, F);
    else if (cfg.command == "additivity") o = cmd_additivity(cfg, F);
    else if (cfg.command == "obstruction") o = cmd_obstruction(cfg, F);
    else if (cfg.command == "mobius") o = cmd_mobius(cfg, F);
    else if (cfg.command == "verify") o = cmd_verify(cfg, F);
    else throw Error(Errc::InputError, "unknown command " + cfg.command);
    if (cfg.format == Format::Csv) {
      out << o.csv;
    } else {
      out << o.report.dump(2) << "\n";
    }
    if (o.violation) {
      err << "law violated; see report\n";
      return kExitViolation;
    }
    if (o.incomplete) {
      err << "some checks could not be completed; see report\n";
      return kExitError;
    }
    return kExitOk;
  } catch (const Error& e) {
    report_error(cfg.command, cfg.format, e, out, err);
    return kExitError;
  }
}

}  // namespace graphoid::cli
