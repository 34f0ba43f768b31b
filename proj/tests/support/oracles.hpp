#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the algorithms under test beyond parsing and evaluation.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/algebra/bipoly.hpp"
#include "graphoid/graphoid.hpp"
#include "graphoid/rf_parser.hpp"

#ifndef GRAPHOID_TEST_DATA
#define GRAPHOID_TEST_DATA "tests/data"
#endif

namespace graphoid::testing {

inline BiPoly poly(const std::string& text) { return parse_rational_fn(text).p(); }

inline Family family(std::initializer_list<const char*> members) {
  Family F;
  for (const char* m : members) F.members.push_back(parse_rational_fn(m));
  return F;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct NamedFamily {
  std::string name;
  Family family;
};

inline std::vector<NamedFamily> corpus_families() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(GRAPHOID_TEST_DATA) / "corpus"))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedFamily> out;
  for (const auto& f : files) out.push_back({f.stem().string(), Family{parse_family(read_file(f))}});
  return out;
}

struct NamedCurve {
  std::string name;
  std::string text;
};

inline std::vector<NamedCurve> named_curves() {
  return {
      {"cusp", "y^2 - x^3"},
      {"node", "y^2 - x^2*(x + 1)"},
      {"tacnode", "y^2 - x^5"},
      {"cubic_root", "x - y^3"},
      {"crossing_lines", "y^2 - x^2"},
      {"axes", "x*y"},
      {"three_lines", "(y - x)*(y + 2*x)*x"},
      {"line_parabola", "(y - x)*(y - x^2)"},
      {"tangent_parabolas", "(y - x^2)*(y + x^2)"},
      {"folium", "x^3 + y^3 - 3*x*y"},
      {"circle", "x^2 + y^2 - 2*x"},
      {"isolated", "x^2 + y^2"},
      {"ramphoid", "(y - x^2)^2 - x^5"},
      {"quartic_lines", "x^4 - y^4"},
  };
}

/// Random polynomial with integer coefficients in [-c, c], total degree at
/// most d; vanishes at the origin when through_origin.
template <class Rng>
BiPoly random_poly(Rng& rng, int d, bool through_origin, int c = 3, double density = 0.45) {
  std::uniform_int_distribution<int> coef(-c, c);
  std::bernoulli_distribution keep(density);
  for (;;) {
    BiPoly::Terms t;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) {
        if (through_origin && i + j == 0) continue;
        if (!keep(rng)) continue;
        int v = coef(rng);
        if (v != 0) t[{i, j}] = Rat(v);
      }
    BiPoly p(t);
    if (!p.is_constant()) return p;
  }
}

/// Determinant of the Sylvester matrix of a and b in y, specialized at
/// x = x0, with the deg_y(a) rows of b first. Plain Gaussian elimination.
inline Rat sylvester_at(const BiPoly& a, const BiPoly& b, const Rat& x0) {
  const int m = a.deg_y(), n = b.deg_y();
  auto coeffs = [&](const BiPoly& p, int deg) {
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (const auto& [mono, v] : p.terms()) {
      Rat xp = 1;
      for (int k = 0; k < mono.i; ++k) xp *= x0;
      c[static_cast<std::size_t>(mono.j)] += v * xp;
    }
    return c;
  };
  const std::vector<Rat> ca = coeffs(a, m), cb = coeffs(b, n);
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Rat>> M(static_cast<std::size_t>(N), std::vector<Rat>(static_cast<std::size_t>(N)));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[r][r + j] = cb[static_cast<std::size_t>(n - j)];
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[m + r][r + j] = ca[static_cast<std::size_t>(m - j)];
  Rat det = 1;
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (M[r][col] == 0) continue;
      Rat f = M[r][col] / M[col][col];
      for (int k = col; k < N; ++k) M[r][k] -= f * M[col][k];
    }
  }
  return det;
}

/// Sign changes of p around the circle of radius r about (cx, cy): the
/// number of real branches of a squarefree curve crossing the circle.
inline int polar_sign_changes(const BiPoly& p, long double cx, long double cy, long double r, int n = 1 << 14) {
  std::vector<int> signs;
  for (int i = 0; i < n; ++i) {
    long double phi = 2 * std::numbers::pi_v<long double> * i / n;
    long double v = p.eval(cx + r * std::cos(phi), cy + r * std::sin(phi));
    if (v != 0) signs.push_back(v > 0 ? 1 : -1);
  }
  int changes = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) changes += signs[i] != signs[(i + 1) % signs.size()];
  return changes;
}

/// x/y on the square boundary around the origin: cot of the polar angle.
inline double cot_on_square(double theta) {
  auto [dx, dy] = square_offset(theta);
  long double phi = std::atan2(dy, dx);
  long double s = std::sin(phi);
  if (std::fabs(s) < 1e-300L) return std::numeric_limits<double>::infinity();
  return static_cast<double>(std::cos(phi) / s);
}

inline Rat random_rat(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  Rat q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

}  // namespace graphoid::testing
