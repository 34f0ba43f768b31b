#include <cmath>
#include <sstream>

#include "internal.hpp"

namespace graphoid::cli {

Json coef_json(const Coef& c) {
  if (c.is_exact()) return c.exact().get_str();
  return c.to_decimal(20);
}

Json value_json(const ProjValue& v) {
  if (v.is_infinite()) return "inf";
  return coef_json(v.value());
}

Json value_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

Json tuple_json(const std::vector<double>& t) {
  Json a = Json::array();
  for (double v : t) a.push_back(value_json(v));
  return a;
}

Json point_json(const Point& p) {
  Json j;
  j["x"] = coef_json(p.x);
  j["y"] = coef_json(p.y);
  j["exact"] = p.is_exact();
  if (!p.is_exact()) j["error"] = std::max(p.x.error_double(), p.y.error_double());
  return j;
}

Json branch_json(const PuiseuxBranch& b) {
  Json j;
  j["id"] = b.id;
  j["direction"] = to_string(b.direction);
  j["m"] = b.m;
  j["radius"] = b.radius.get_str();
  j["conj_id"] = b.conj_id;
  j["sign_chart"] = b.sign_chart;
  j["exact"] = b.exact;
  // (exponent numerator over m, coefficient, error radius)
  Json coeffs = Json::array();
  for (std::size_t k = 0; k < b.psi.size(); ++k) {
    const Coef& c = b.psi[k];
    if (c.is_exact() && c.exact() == 0) continue;
    coeffs.push_back(Json::array({k, c.to_decimal(20), c.error_double()}));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json parity_json(const ParityReport& r) {
  Json j;
  j["regular_value"] = r.regular_value;
  j["preimage_count"] = r.preimage_count;
  j["parity"] = r.odd ? "odd" : "even";
  j["z2_trivial"] = r.z2_trivial;
  return j;
}

std::string csv_value(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_samples(const BoundaryMapSamples& s) {
  std::ostringstream os;
  os << "theta";
  for (std::size_t k = 0; k < (s.values.empty() ? 0 : s.values[0].size()); ++k) os << ",f" << k;
  os << "\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << csv_value(s.thetas[i]);
    for (double v : s.values[i]) os << "," << csv_value(v);
    os << "\n";
  }
  return os.str();
}

void report_error(const std::string& command, Format format, const Error& e, std::ostream& out, std::ostream& err) {
  if (format == Format::Json) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["error"]["code"] = e.qualified_code();
    j["error"]["message"] = e.what();
    if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) j["error"]["offset"] = se->offset();
    out << j.dump(2) << "\n";
  }
  err << "error: " << e.qualified_code() << ": " << e.what() << "\n";
}

}  // namespace graphoid::cli
