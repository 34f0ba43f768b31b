#pragma once

#include <string>

#include "graphoid/cli/cli.hpp"
#include "graphoid/error.hpp"
#include "json.hpp"

namespace graphoid::cli {

using Json = nlohmann::ordered_json;

Json coef_json(const Coef& c);
Json value_json(const ProjValue& v);
Json value_json(double v);
Json tuple_json(const std::vector<double>& t);
Json point_json(const Point& p);
Json branch_json(const PuiseuxBranch& b);
Json parity_json(const ParityReport& r);
std::string csv_value(double v);
std::string csv_samples(const BoundaryMapSamples& s);

/// Error object on out (json only) and a one-line diagnostic on err.
void report_error(const std::string& command, Format format, const Error& e, std::ostream& out, std::ostream& err);

struct Outcome {
  Json report;
  bool violation = false;
  /// Some check could not be carried out (computational error).
  bool incomplete = false;
  std::string csv;
};

Outcome cmd_branches(const RunConfig& cfg, const Family& F);
Outcome cmd_limit(const RunConfig& cfg, const Family& F);
Outcome cmd_fiber(const RunConfig& cfg, const Family& F);
Outcome cmd_degree(const RunConfig& cfg, const Family& F);
Outcome cmd_additivity(const RunConfig& cfg, const Family& F);
Outcome cmd_obstruction(const RunConfig& cfg, const Family& F);
Outcome cmd_mobius(const RunConfig& cfg, const Family& F);
Outcome cmd_verify(const RunConfig& cfg, const Family& F);

/// Even branch count and a fixed-point-free conjugation.
bool involution_ok(const BranchSet& set);
/// Distinct nonconstant level curves of the family.
std::vector<BiPoly> default_curves(const Family& F);

/// Dyadic radius of a square around center that strictly contains every
/// singular point of F with a margin of at least 1/2.
Rat enclosing_radius(const Family& F, const Point& center);

}  // namespace graphoid::cli
