#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/degree.hpp"

namespace graphoid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;
  std::string input_path;
  std::optional<std::pair<Rat, Rat>> point;
  std::optional<Rat> radius;
  std::size_t samples = 1024;
  int order = kDefaultOrder;
  int precision_bits = kDefaultPrecision;
  double tol = 1e-6;
  Format format = Format::Json;
  ChartFlip chart = ChartFlip::None;
  std::uint64_t seed = 0;
  std::size_t member = 0;
  /// Level c of the curve f = c used by `branches`; "inf" selects q = 0.
  std::string level = "0";
  /// Curve for `limit`; empty means the level curves of the family.
  std::string curve;
};

/// Command-line entry: parses arguments, runs, writes the report to out and
/// diagnostics to err. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration on the family text.
int run(const RunConfig& cfg, const std::string& family_text, std::ostream& out, std::ostream& err);

/// "3", "-1/2" or "0.125" as an exact rational; InputError otherwise.
Rat parse_rat(const std::string& text);
/// "a,b" with rational a, b.
std::pair<Rat, Rat> parse_point(const std::string& text);

}  // namespace graphoid::cli
