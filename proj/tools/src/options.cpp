#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphoid/error.hpp"
#include "internal.hpp"

namespace graphoid::cli {

Rat parse_rat(const std::string& text) {
  auto bad = [&] { return Error(Errc::InputError, "not a rational number: '" + text + "'"); };
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw bad();
  bool neg = s[0] == '-';
  std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
  if (body.empty()) throw bad();
  Rat r;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((ip + fp).empty() || (ip + fp).find_first_not_of("0123456789") != std::string::npos) throw bad();
    Int num((ip + fp).empty() ? "0" : ip + fp, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    r = Rat(num, den);
  } else {
    if (body.find_first_not_of("0123456789/") != std::string::npos) throw bad();
    auto slash = body.find('/');
    std::string a = body.substr(0, slash);
    std::string b = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (a.empty() || b.empty() || b.find('/') != std::string::npos) throw bad();
    Int den(b, 10);
    if (den == 0) throw bad();
    r = Rat(Int(a, 10), den);
  }
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

std::pair<Rat, Rat> parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(Errc::InputError, "point must be given as a,b");
  return {parse_rat(text.substr(0, comma)), parse_rat(text.substr(comma + 1))};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string point, radius, format = "json", chart = "none";
  CLI::App app{"Branches, limits, fibers and parity certificates for families of rational functions", "graphoid"};
  app.add_option("command", cfg.command, "Subcommand")
      ->required()
      ->check(CLI::IsMember({"branches", "limit", "fiber", "degree", "additivity", "obstruction", "mobius", "verify"}));
  app.add_option("input", cfg.input_path, "Family file, one rational function per line")->required();
  app.add_option("--point", point, "Point a,b (rationals)");
  app.add_option("--radius", radius, "Square radius (rational)");
  app.add_option("--samples", cfg.samples, "Boundary samples")->check(CLI::Range(std::size_t{64}, std::size_t{1} << 24));
  app.add_option("--order", cfg.order, "Series truncation order")->check(CLI::Range(1, 96));
  app.add_option("--precision", cfg.precision_bits, "Working precision in bits")->check(CLI::Range(64, 65536));
  app.add_option("--tol", cfg.tol, "Fiber Hausdorff tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--chart", chart, "Coordinate flip: none, x, y or xy");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--member", cfg.member, "Family member used as coordinate");
  app.add_option("--level", cfg.level, "Level c of the curve f = c (branches); inf for q = 0");
  app.add_option("--curve", cfg.curve, "Curve polynomial for limit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(cfg.command, format == "csv" ? Format::Csv : Format::Json, Error(Errc::InputError, e.what()), out, err);
    return kExitError;
  }
  std::string text;
  try {
    if (!point.empty()) cfg.point = parse_point(point);
    if (!radius.empty()) {
      cfg.radius = parse_rat(radius);
      if (*cfg.radius <= 0) throw Error(Errc::InputError, "radius must be positive");
    }
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    cfg.chart = parse_chart_flip(chart);
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) throw Error(Errc::InputError, "cannot read " + cfg.input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } catch (const Error& e) {
    report_error(cfg.command, cfg.format, e, out, err);
    return kExitError;
  }
  return run(cfg, text, out, err);
}

}  // namespace graphoid::cli
