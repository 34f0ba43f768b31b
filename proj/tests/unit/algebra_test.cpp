#include <gtest/gtest.h>

#include <random>

#include "graphoid/algebra/bigfloat.hpp"
#include "graphoid/algebra/elimination.hpp"
#include "graphoid/algebra/roots.hpp"
#include "graphoid/algebra/unipoly.hpp"
#include "graphoid/error.hpp"
#include "oracles.hpp"

using namespace graphoid;
using graphoid::testing::poly;
using graphoid::testing::random_poly;
using graphoid::testing::random_rat;
using graphoid::testing::sylvester_at;

namespace {

bool associates(const BiPoly& a, const BiPoly& b) { return a.primitive() == b.primitive(); }

UniPoly upoly(std::initializer_list<long> c) { return UniPoly(c); }

}  // namespace

TEST(Gcd, Examples) {
  EXPECT_EQ(poly_gcd(poly("x*y"), poly("x^2")), poly("x"));
  EXPECT_TRUE(poly_gcd(poly("y^2 - x^3"), poly("y - x")).is_constant());
  BiPoly p = poly("6*x^2*y - 4*y^3 + 2*x");
  EXPECT_EQ(poly_gcd(p, p), p.primitive());
}

TEST(Gcd, CommonFactorIsRecovered) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 60; ++i) {
    BiPoly a = random_poly(rng, 2, false), b = random_poly(rng, 2, false), g = random_poly(rng, 2, false);
    EXPECT_TRUE(associates(poly_gcd(a * g, b * g), g * poly_gcd(a, b)))
        << a.to_string() << " | " << b.to_string() << " | " << g.to_string();
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant_y(poly("y^2 - x^3"), poly("y - x")), upoly({0, 0, 1, -1}));
  EXPECT_TRUE(resultant_y(poly("y"), poly("y")).is_zero());
  EXPECT_EQ(resultant_y(poly("y - 1"), poly("y + 1")), UniPoly::constant(Rat(-2)));
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 80; ++i) {
    BiPoly a = random_poly(rng, 4, false), b = random_poly(rng, 3, false);
    if (a.deg_y() + b.deg_y() == 0) continue;
    UniPoly r = resultant_y(a, b);
    for (int k = 0; k < 3; ++k) {
      Rat x0 = random_rat(rng, 9, 5);
      EXPECT_EQ(r.eval(x0), sylvester_at(a, b, x0)) << a.to_string() << " , " << b.to_string() << " at " << x0;
    }
  }
}

TEST(Resultant, CoprimeInputsGiveNonzeroResultant) {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 100) {
    BiPoly a = random_poly(rng, 4, false), b = random_poly(rng, 4, false);
    if (a.deg_y() == 0 || b.deg_y() == 0 || !poly_gcd(a, b).is_constant()) continue;
    ++checked;
    EXPECT_FALSE(resultant_y(a, b).is_zero()) << a.to_string() << " , " << b.to_string();
  }
}

TEST(Resultant, XVersionSwapsRoles) {
  BiPoly a = poly("x^2 + y^2 - 1"), b = poly("x - y");
  EXPECT_EQ(resultant_x(a, b), resultant_y(a.swap_xy(), b.swap_xy()));
}

TEST(Roots, Examples) {
  auto r = isolate_real_roots(upoly({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].value.to_double(), -1.41421356, 1e-8);
  EXPECT_NEAR(r[1].value.to_double(), 1.41421356, 1e-8);
  EXPECT_EQ(r[0].multiplicity, 1);

  auto z = isolate_real_roots(upoly({0, 0, 0, 1}));
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0].multiplicity, 3);
  ASSERT_TRUE(z[0].exact);
  EXPECT_EQ(*z[0].exact, 0);

  EXPECT_TRUE(isolate_real_roots(upoly({1, 0, 1})).empty());
}

TEST(Roots, KnownFactorsAreFound) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    // product of (x - r_k)^e_k and an irreducible quadratic
    std::map<Rat, int> want;
    UniPoly p = upoly({1});
    std::uniform_int_distribution<int> count(1, 4), mult(1, 3);
    for (int k = count(rng); k > 0; --k) {
      Rat r = random_rat(rng, 20, 7);
      int e = mult(rng);
      want[r] += e;
      for (int j = 0; j < e; ++j) p *= UniPoly(std::vector<Rat>{Rat(-r), Rat(1)});
    }
    p *= upoly({3, 1, 1});
    auto roots = isolate_real_roots(p);
    ASSERT_EQ(roots.size(), want.size()) << p.to_string();
    auto it = want.begin();
    for (const auto& r : roots) {
      ASSERT_TRUE(r.exact) << p.to_string();
      EXPECT_EQ(*r.exact, it->first);
      EXPECT_EQ(r.multiplicity, it->second);
      ++it;
    }
  }
}

TEST(Roots, IntervalsAreDisjointAndBracketSignChanges) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> cs;
    for (int k = 0; k < 7; ++k) cs.emplace_back(c(rng));
    UniPoly p(cs);
    if (p.degree() < 1) continue;
    UniPoly sq = squarefree_part(p);
    auto roots = isolate_real_roots(p);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const auto& r = roots[k];
      if (k > 0) EXPECT_LT(roots[k - 1].hi, r.lo);
      if (r.exact) {
        EXPECT_EQ(p.eval(*r.exact), 0);
      } else {
        EXPECT_LT(sq.eval(r.lo) * sq.eval(r.hi), 0) << p.to_string();
      }
    }
  }
}

TEST(Roots, SturmCountMatchesIsolation) {
  UniPoly p = upoly({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  EXPECT_EQ(count_roots(p, Rat(0), Rat(3)), 3);
  EXPECT_EQ(count_roots(p, Rat(1), Rat(5, 2)), 1);
  EXPECT_EQ(real_roots_in(p, Rat(3, 2), Rat(3)).size(), 2u);
}

TEST(Roots, SimplestRational) {
  EXPECT_EQ(simplest_rational(Rat(3, 10), Rat(4, 10)), Rat(1, 3));
  EXPECT_EQ(simplest_rational(Rat(-7, 5), Rat(-1, 5)), Rat(-1));
}

TEST(BigFloat, BallsContainExactResults) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    Rat a = random_rat(rng, 1000, 999), b = random_rat(rng, 1000, 999);
    if (b == 0) continue;
    BigFloat A(a, 64), B(b, 64);
    EXPECT_TRUE((A + B).contains(a + b));
    EXPECT_TRUE((A - B).contains(a - b));
    EXPECT_TRUE((A * B).contains(a * b));
    EXPECT_TRUE((A / B).contains(a / b));
  }
}

TEST(BigFloat, WideBallsPropagate) {
  BigFloat a(Rat(1), Rat(1, 1000), 128);
  BigFloat sq = a * a;
  EXPECT_TRUE(sq.contains(Rat(999 * 999, 1000 * 1000)));
  EXPECT_TRUE(sq.contains(Rat(1001 * 1001, 1000 * 1000)));
  BigFloat r = BigFloat(Rat(2), 128).sqrt();
  EXPECT_TRUE((r * r).contains(Rat(2)));
  EXPECT_LT(r.error_double(), 1e-30);
  EXPECT_THROW(BigFloat(Rat(1), 64) / BigFloat(Rat(0), Rat(1, 10), 64), Error);
}

TEST(UniPoly, DivisionIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> ac, bc;
    for (int k = 0; k < 6; ++k) ac.emplace_back(c(rng));
    for (int k = 0; k < 3; ++k) bc.emplace_back(c(rng));
    UniPoly a(ac), b(bc);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(UniPoly, SquarefreeDecompositionReconstructs) {
  UniPoly p = upoly({-1, 1});
  p = p * p * p * upoly({2, 0, 1}) * upoly({0, 1});
  UniPoly prod = upoly({1});
  for (const auto& [f, e] : squarefree_decomposition(p))
    for (int k = 0; k < e; ++k) prod *= f;
  EXPECT_EQ(prod.monic(), p.monic());
}

TEST(BiPoly, ArithmeticAgreesWithEvaluation) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    BiPoly a = random_poly(rng, 3, false), b = random_poly(rng, 3, false);
    Rat x = random_rat(rng, 7, 5), y = random_rat(rng, 7, 5);
    EXPECT_EQ((a * b).eval(x, y), a.eval(x, y) * b.eval(x, y));
    EXPECT_EQ((a - b).eval(x, y), a.eval(x, y) - b.eval(x, y));
    EXPECT_EQ(a.translate(x, y).eval(Rat(0), Rat(0)), a.eval(x, y));
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(BiPoly, ToStringIsGradedLex) { EXPECT_EQ(poly("3/4*y^2 + x^2 - 2*x*y").to_string(), "x^2 - 2*x*y + 3/4*y^2"); }

TEST(CommonZeros, CircleMeetsDiagonal) {
  auto pts = common_real_zeros(poly("x^2 + y^2 - 1"), poly("x - y"));
  ASSERT_EQ(pts.size(), 2u);
  for (const Point& p : pts) {
    EXPECT_NEAR(std::fabs(p.x.to_double()), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(p.x.to_double(), p.y.to_double(), 1e-15);
  }
}

TEST(CommonZeros, RationalPointsAreExact) {
  auto pts = common_real_zeros(poly("x - 1"), poly("y^2 - y"));
  ASSERT_EQ(pts.size(), 2u);
  for (const Point& p : pts) EXPECT_TRUE(p.is_exact());
}

TEST(CoprimeBasis, CoversTheSameZeroSet) {
  auto basis = coprime_basis({poly("x*y"), poly("x^2 - x*y"), poly("y*(x - y)")});
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) EXPECT_TRUE(poly_gcd(basis[i], basis[j]).is_constant());
  BiPoly prod = BiPoly::constant(Rat(1));
  for (const auto& b : basis) prod *= b;
  EXPECT_TRUE(associates(prod, poly("x*y*(x - y)")));
}
