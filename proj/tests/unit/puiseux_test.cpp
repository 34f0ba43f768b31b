#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphoid/algebra/elimination.hpp"
#include "graphoid/error.hpp"
#include "graphoid/puiseux.hpp"
#include "oracles.hpp"

using namespace graphoid;
using graphoid::testing::named_curves;
using graphoid::testing::polar_sign_changes;
using graphoid::testing::poly;
using graphoid::testing::random_poly;

namespace {

bool in_triangle(Direction d, long double x, long double y) {
  const long double slack = 1e-15L;
  switch (d) {
    case Direction::E: return x > 0 && std::fabs(y) <= x + slack;
    case Direction::N: return y > 0 && std::fabs(x) <= y + slack;
    case Direction::W: return x < 0 && std::fabs(y) <= -x + slack;
    case Direction::S: return y < 0 && std::fabs(x) <= -y + slack;
  }
  return false;
}

long double t_max(const PuiseuxBranch& b) { return std::pow(static_cast<long double>(b.radius.get_d()), 1.0L / b.m); }

std::vector<BiPoly> test_curves() {
  std::vector<BiPoly> out;
  for (const auto& c : named_curves()) out.push_back(poly(c.text));
  std::mt19937_64 rng(17);
  while (out.size() < 40) {
    BiPoly p = random_poly(rng, 4, true);
    if (squarefree_part(p) == p.primitive()) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(NewtonPolygon, Examples) {
  auto cusp = newton_polygon(poly("y^2 - x^3"));
  ASSERT_EQ(cusp.size(), 1u);
  EXPECT_EQ(cusp[0].slope, Rat(-2, 3));
  EXPECT_EQ(cusp[0].edge_poly, UniPoly({-1, 0, 1}));

  auto node = newton_polygon(poly("y^2 - x^2*(x + 1)"));
  ASSERT_EQ(node.size(), 1u);
  EXPECT_EQ(node[0].slope, Rat(-1));
  EXPECT_EQ(node[0].edge_poly, UniPoly({-1, 0, 1}));

  auto line = newton_polygon(poly("y - x"));
  ASSERT_EQ(line.size(), 1u);
  EXPECT_EQ(line[0].slope, Rat(-1));
  EXPECT_EQ(line[0].edge_poly, UniPoly({-1, 1}));
}

TEST(NewtonPolygon, TwoEdges) {
  // y (y - x^2) (y - x): slopes -1 and -1/2 after removing the y factor
  auto edges = newton_polygon(poly("(y - x)*(y - x^2)"));
  ASSERT_EQ(edges.size(), 2u);
  std::set<Rat> slopes{edges[0].slope, edges[1].slope};
  EXPECT_EQ(slopes, (std::set<Rat>{Rat(-1), Rat(-1, 2)}));
}

TEST(Branches, Cusp) {
  BranchSet set = expand_branches(poly("y^2 - x^3"));
  ASSERT_EQ(set.branches.size(), 2u);
  for (const auto& b : set.branches) {
    EXPECT_EQ(b.direction, Direction::E);
    EXPECT_EQ(b.m, 2);
    EXPECT_EQ(b.valuation(), 3);
    EXPECT_NEAR(std::fabs(b.psi[3].to_double()), 1.0, 1e-12);
  }
  EXPECT_EQ(set.conjugate_of(set.branches[0]).id, set.branches[1].id);
  EXPECT_LT(set.branches[0].psi[3].to_double() * set.branches[1].psi[3].to_double(), 0);
}

TEST(Branches, OddDenominatorPutsConjugatesOpposite) {
  BranchSet set = expand_branches(poly("x - y^3"));
  ASSERT_EQ(set.branches.size(), 2u);
  const auto& a = set.branches[0];
  const auto& b = set.conjugate_of(a);
  EXPECT_NE(a.id, b.id);
  EXPECT_EQ((static_cast<int>(a.direction) + 2) % 4, static_cast<int>(b.direction));
  EXPECT_TRUE(a.direction == Direction::N || a.direction == Direction::S);
}

TEST(Branches, NodeMatchesPolarOracle) {
  BiPoly p = poly("y^2 - x^2*(x + 1)");
  BranchSet set = expand_branches(p);
  ASSERT_EQ(set.branches.size(), 4u);
  for (const auto& b : set.branches) EXPECT_EQ(b.m, 1);
  std::set<std::pair<int, int>> pairs;
  for (const auto& b : set.branches) pairs.insert(std::minmax(b.id, set.conjugate_of(b).id));
  EXPECT_EQ(pairs.size(), 2u);
  EXPECT_EQ(polar_sign_changes(p, 0, 0, 1e-2), 4);
}

TEST(Branches, SmoothLineConjugateIsOtherHalf) {
  BranchSet set = expand_branches(poly("y - x"));
  ASSERT_EQ(set.branches.size(), 2u);
  const auto& a = set.branches[0];
  const auto& b = set.conjugate_of(a);
  EXPECT_EQ(a.m, 1);
  EXPECT_EQ(a.sign_chart, -b.sign_chart);
  auto [ax, ay] = a.offset_at(0.01L);
  auto [bx, by] = b.offset_at(0.01L);
  EXPECT_NEAR(static_cast<double>(ax + bx), 0.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(ay + by), 0.0, 1e-15);
}

TEST(Branches, TranslatedCenter) {
  BranchSet set = expand_branches(poly("(y - 2)^2 - (x - 1)^3"), Point{Coef(Rat(1)), Coef(Rat(2))});
  ASSERT_EQ(set.branches.size(), 2u);
  EXPECT_EQ(set.branches[0].m, 2);
  EXPECT_TRUE(expand_branches(poly("y - x - 1")).branches.empty());
  try {
    newton_polygon(poly("y - x - 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoOrigin);
  }
}

TEST(BranchLaws, EvenCountAndInvolution) {
  for (const BiPoly& p : test_curves()) {
    BranchSet set = expand_branches(p);
    EXPECT_EQ(set.branches.size() % 2, 0u) << p.to_string();
    for (const auto& b : set.branches) {
      const auto& c = set.conjugate_of(b);
      EXPECT_NE(c.id, b.id) << p.to_string();
      EXPECT_EQ(set.conjugate_of(c).id, b.id) << p.to_string();
    }
  }
}

TEST(BranchLaws, CountMatchesPolarOracle) {
  for (const BiPoly& p : test_curves()) {
    BranchSet set = expand_branches(p);
    double r = Rat(a_small_radius({p}) / 2).get_d();
    EXPECT_EQ(polar_sign_changes(p, 0, 0, r), static_cast<int>(set.branches.size())) << p.to_string();
  }
}

TEST(BranchLaws, SampledPointsLieInTheirTriangle) {
  for (const BiPoly& p : test_curves()) {
    for (const auto& b : expand_branches(p).branches) {
      // the truncated series is only trusted near the center
      for (int k = 6; k <= 40; ++k) {
        auto [x, y] = b.offset_at(std::ldexp(t_max(b), -k));
        EXPECT_TRUE(in_triangle(b.direction, x, y)) << p.to_string() << " branch " << b.id << " " << to_string(b.direction);
      }
    }
  }
}

TEST(BranchLaws, SeriesSatisfiesTheCurve) {
  for (const BiPoly& p : test_curves()) {
    for (const auto& b : expand_branches(p).branches) {
      std::size_t n = b.psi.size();
      Series res = compose(*b.frame_curve, b.m, b.psi, n);
      for (std::size_t k = 0; k < n; ++k) {
        double bound = std::max(b.tail_bound, 1e-30) * 1e6;
        EXPECT_TRUE(res[k].is_zero() || std::fabs(res[k].to_double()) <= bound)
            << p.to_string() << " coefficient " << k << " = " << res[k].to_decimal(6);
      }
      // and numerically near the center
      long double t = std::ldexp(t_max(b), -12);
      auto [x, y] = b.offset_at(t);
      long double scale = std::pow(std::hypot(x, y), 2.0L);
      EXPECT_LE(std::fabs(p.eval(x, y)), 1e-6L * scale + 1e-15L) << p.to_string();
    }
  }
}

TEST(ASmall, Examples) {
  EXPECT_EQ(a_small_radius({poly("y^2 - x^3")}), Rat(1, 2));
  EXPECT_EQ(a_small_radius({poly("y^2 - x^2*(x + 1)")}), Rat(1, 2));
  EXPECT_EQ(a_small_radius({poly("y - x"), poly("y + x")}), Rat(1, 2));
  // a second component through (1/8, 0) forces a smaller square
  Rat r = a_small_radius({poly("y - x"), poly("8*x - 1")});
  EXPECT_LE(r, Rat(1, 8));
  EXPECT_TRUE(is_a_small({poly("y - x"), poly("8*x - 1")}, r));
  EXPECT_FALSE(is_a_small({poly("y - x"), poly("8*x - 1")}, Rat(1, 2)));
}

TEST(ASmall, RadiusIsDyadic) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    BiPoly p = random_poly(rng, 3, true);
    Rat r = a_small_radius({p});
    EXPECT_GT(r, 0);
    EXPECT_LE(r, Rat(1, 2));
    Int d = r.get_den();
    EXPECT_EQ(d & (d - 1), 0) << r;
  }
}

TEST(CoefPoly, TranslateAndRotateAgreeWithEvaluation) {
  BiPoly p = poly("x^3 - 2*x*y + y^2 - 5");
  CoefPoly c = CoefPoly::from(p);
  CoefPoly t = c.translate(Coef(Rat(1, 3)), Coef(Rat(-2)));
  EXPECT_NEAR(static_cast<double>(t.eval(0.5L, 0.25L)), static_cast<double>(p.eval(0.5L + 1.0L / 3, 0.25L - 2)), 1e-12);
  CoefPoly r = c.rotate(1);  // p(-y, x)
  EXPECT_NEAR(static_cast<double>(r.eval(0.5L, 0.25L)), static_cast<double>(p.eval(-0.25L, 0.5L)), 1e-12);
}

TEST(SeriesOps, MultiplicationMatchesConvolution) {
  Series a{Coef(1L), Coef(2L), Coef(Rat(1, 2))}, b{Coef(3L), Coef(-1L)};
  Series c = series_mul(a, b, 4);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0].exact(), 3);
  EXPECT_EQ(c[1].exact(), 5);
  EXPECT_EQ(c[2].exact(), Rat(-1, 2));
  EXPECT_EQ(c[3].exact(), Rat(-1, 2));
  Series p = series_pow(b, 3, 3);
  EXPECT_EQ(p[0].exact(), 27);
  EXPECT_EQ(p[1].exact(), -27);
  EXPECT_EQ(p[2].exact(), 9);
}
