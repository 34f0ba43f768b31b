#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphoid/projective.hpp"

using namespace graphoid;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Chordal distance through the unit circle model: x -> angle 2 atan(x).
double circle_chord(double a, double b) {
  double ta = std::isinf(a) ? M_PI : 2 * std::atan(a);
  double tb = std::isinf(b) ? M_PI : 2 * std::atan(b);
  return std::hypot(std::cos(ta) - std::cos(tb), std::sin(ta) - std::sin(tb));
}

double random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  return std::tan(M_PI * u(rng));
}

}  // namespace

TEST(Chordal, Examples) {
  EXPECT_DOUBLE_EQ(chordal_dist(0.0, kInf), 2.0);
  EXPECT_DOUBLE_EQ(chordal_dist(3.5, 3.5), 0.0);
  EXPECT_NEAR(chordal_dist(0.0, 1.0), std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(chordal_dist(kInf, -kInf), 0.0);
  EXPECT_DOUBLE_EQ(chordal_dist(ProjValue(Rat(0)), ProjValue::infinity()), 2.0);
}

TEST(Chordal, AgreesWithCircleModel) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    double a = random_point(rng), b = random_point(rng);
    EXPECT_NEAR(chordal_dist(a, b), circle_chord(a, b), 1e-12);
  }
}

TEST(Chordal, IsAMetric) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    double a = random_point(rng), b = random_point(rng), c = random_point(rng);
    if (i % 7 == 0) c = kInf;
    EXPECT_EQ(chordal_dist(a, b), chordal_dist(b, a));
    EXPECT_LE(chordal_dist(a, c), chordal_dist(a, b) + chordal_dist(b, c) + 1e-12);
    EXPECT_GE(chordal_dist(a, b), 0.0);
  }
}

TEST(Turns, ChartRoundTrip) {
  EXPECT_DOUBLE_EQ(to_turn(0.0), 0.0);
  EXPECT_DOUBLE_EQ(to_turn(kInf), 0.5);
  EXPECT_NEAR(to_turn(1.0), 0.25, 1e-16);
  EXPECT_NEAR(to_turn(-1.0), 0.75, 1e-16);
  for (double x : {-7.0, -0.3, 0.0, 0.25, 11.0}) EXPECT_NEAR(from_turn(to_turn(x)), x, 1e-12 * (1 + std::fabs(x)));
  EXPECT_NEAR(turn_delta(0.9, 0.1), 0.2, 1e-15);
  EXPECT_NEAR(turn_delta(0.1, 0.9), -0.2, 1e-15);
}

TEST(SegmentChart, Examples) {
  EXPECT_DOUBLE_EQ(segment_chart(2.0, Segment::OneInf), 0.5);
  EXPECT_EQ(segment_chart(ProjValue::infinity(), Segment::OneInf).exact(), 1);
  EXPECT_DOUBLE_EQ(segment_chart(0.25, Segment::ZeroOne), 0.25);
  EXPECT_DOUBLE_EQ(segment_chart(-2.0, Segment::InfMinusOne), 0.5);
  EXPECT_EQ(segment_chart(ProjValue(Rat(-1, 3)), Segment::MinusOneZero).exact(), Rat(2, 3));
}

TEST(SegmentChart, StrictlyMonotoneOnEachSegment) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 0.25);
  for (int s = 0; s < 4; ++s) {
    Segment seg = static_cast<Segment>(s);
    for (int i = 0; i < 100; ++i) {
      double a = u(rng), b = u(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      double xa = from_turn(0.25 * s + a), xb = from_turn(0.25 * s + b);
      EXPECT_LT(segment_chart(xa, seg), segment_chart(xb, seg)) << to_string(seg);
    }
  }
}

TEST(Segments, ClosuresCoverAndMeetAtFourPoints) {
  for (int k = 0; k < 4000; ++k) {
    double x = from_turn((k + 0.5) / 4000);
    int in = 0;
    for (int s = 0; s < 4; ++s) in += in_closure(x, static_cast<Segment>(s));
    EXPECT_EQ(in, 1) << x;
    EXPECT_TRUE(in_closure(x, segment_of(x)));
  }
  for (double x : {0.0, 1.0, kInf, -1.0}) {
    int in = 0;
    for (int s = 0; s < 4; ++s) in += in_closure(x, static_cast<Segment>(s));
    EXPECT_EQ(in, 2) << x;
  }
  EXPECT_EQ(segment_of(0.0), Segment::ZeroOne);
  EXPECT_EQ(segment_of(kInf), Segment::OneInf);
  EXPECT_EQ(segment_of(1.0), Segment::ZeroOne);
  EXPECT_EQ(segment_of(-0.5), Segment::MinusOneZero);
}

TEST(Net, LevelZeroIsTheFourPoints) {
  Net n = build_net(0);
  ASSERT_EQ(n.size(), 4u);
  EXPECT_DOUBLE_EQ(n.value(0), 0.0);
  EXPECT_NEAR(n.value(1), 1.0, 1e-15);
  EXPECT_TRUE(std::isinf(n.value(2)) || std::fabs(n.value(2)) > 1e15);
  EXPECT_NEAR(n.value(3), -1.0, 1e-15);
  EXPECT_LE(n.covering_radius(), 1.0);
}

TEST(Net, CoversAtItsLevel) {
  for (int m = 0; m <= 6; ++m) {
    Net n = build_net(m);
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      double x = from_turn(k / 10000.0);
      double best = 2;
      for (std::size_t j = 0; j < n.size(); ++j) best = std::min(best, chordal_dist(x, n.value(j)));
      worst = std::max(worst, best);
    }
    EXPECT_LE(worst, std::ldexp(1.0, -m)) << m;
    EXPECT_LE(worst, n.covering_radius() + 1e-12);
  }
}

TEST(Net, IsNested) {
  for (int m = 0; m < 6; ++m) {
    Net a = build_net(m), b = build_net(m + 1);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_TRUE(b.on_net(a.value(k)));
  }
}

TEST(Net, CellsContainTheirPoints) {
  Net n = build_net(3);
  for (int k = 0; k < 1000; ++k) {
    double u = (k + 0.37) / 1000;
    std::size_t c = n.cell(from_turn(u));
    EXPECT_LE(n.turn(c), u + 1e-12);
    EXPECT_GT(n.turn(c) + 1.0 / static_cast<double>(n.size()), u - 1e-12);
  }
}

TEST(NeighborPairs, CyclicOrder) {
  std::vector<ProjValue> pts{ProjValue(Rat(-1)), ProjValue::infinity(), ProjValue(Rat(1)), ProjValue(Rat(0))};
  auto pairs = neighbor_pairs(pts);
  ASSERT_EQ(pairs.size(), 4u);
  std::vector<std::pair<std::size_t, std::size_t>> want{{3, 2}, {2, 1}, {1, 0}, {0, 3}};
  EXPECT_EQ(pairs, want);

  std::vector<double> corners{0.125, 0.375, 0.625, 0.875};
  EXPECT_EQ(neighbor_pairs(corners).size(), 4u);
  EXPECT_THROW(neighbor_pairs(std::vector<double>{0.5}), std::exception);
}
