#include <gtest/gtest.h>

#include <random>

#include "intcone/errors.hpp"
#include "intcone/polytope.hpp"
#include "intcone/reductions.hpp"
#include "oracles.hpp"

namespace intcone {
namespace {

Polytope make(std::vector<std::vector<long long>> rows, std::vector<long long> rhs) {
  Polytope p;
  for (const auto& r : rows) p.A.push_back(oracle::big(r));
  p.b = oracle::big(rhs);
  return p;
}

TEST(Contains, UnitInterval) {
  const Polytope p = make({{-1}, {1}}, {0, 1});
  EXPECT_TRUE(contains(p, Point{BigInt(0)}));
  EXPECT_FALSE(contains(p, Point{BigInt(2)}));
  EXPECT_THROW(contains(p, Point{BigInt(0), BigInt(0)}), DimensionMismatch);
}

TEST(Contains, GadgetPointThree) {
  const ConeEncoding enc = ssm_to_pic(SsmInstance{{BigInt(2), BigInt(3)}, BigInt(7)});
  EXPECT_TRUE(contains(enc.instance.polytope, oracle::big({0, 1, 1, 0})));
  EXPECT_FALSE(contains(enc.instance.polytope, oracle::big({0, 1, 1, 1})));
  EXPECT_FALSE(contains(enc.instance.polytope, oracle::big({0, 0, 1, 3})));
}

TEST(BoundingBox, ReadsSingleVariableRows) {
  const Box box = bounding_box(make({{1}, {-1}}, {1, 0}));
  EXPECT_EQ(box.lower, oracle::big({0}));
  EXPECT_EQ(box.upper, oracle::big({1}));
  EXPECT_EQ(box.radius(), 1);
}

TEST(BoundingBox, GadgetBoxFromBoxRows) {
  const ConeEncoding enc = ssm_to_pic(SsmInstance{{BigInt(2), BigInt(3)}, BigInt(7)});
  const Box box = bounding_box(enc.instance.polytope);
  EXPECT_EQ(box.lower, oracle::big({0, 0, 0, 0}));
  EXPECT_EQ(box.upper, oracle::big({1, 1, 1, 7}));
  EXPECT_EQ(box.radius(), 7);
}

TEST(BoundingBox, UnboundedBelowIsUnderivable) {
  EXPECT_THROW(bounding_box(make({{1, 1}}, {1})), BoxUnderivable);
}

TEST(BoundingBox, PropagatesThroughSharedRows) {
  // x >= 0, y >= 0, x + y <= 3
  const Box box = bounding_box(make({{-1, 0}, {0, -1}, {1, 1}}, {0, 0, 3}));
  EXPECT_EQ(box.lower, oracle::big({0, 0}));
  EXPECT_EQ(box.upper, oracle::big({3, 3}));
}

TEST(BoundingBox, RoundsFractionalBoundsInward) {
  // 2x <= 5, -3x <= 4  ->  -1 <= x <= 2
  const Box box = bounding_box(make({{2}, {-3}}, {5, 4}));
  EXPECT_EQ(box.lower, oracle::big({-1}));
  EXPECT_EQ(box.upper, oracle::big({2}));
}

TEST(BoundingBox, ContradictoryBoundsGiveEmptyBox) {
  EXPECT_TRUE(bounding_box(make({{-1}, {1}}, {0, -1})).empty);
}

TEST(IntegerPoints, UnitSquare) {
  const auto pts = integer_points(make({{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, {0, 1, 0, 1}));
  const std::vector<Point> expected{oracle::big({0, 0}), oracle::big({0, 1}),
                                    oracle::big({1, 0}), oracle::big({1, 1})};
  EXPECT_EQ(pts, expected);
}

TEST(IntegerPoints, EmptyPolytope) {
  EXPECT_TRUE(integer_points(make({{-1}, {1}}, {0, -1})).empty());
}

TEST(IntegerPoints, GadgetPointSet) {
  const ConeEncoding enc = ssm_to_pic(SsmInstance{{BigInt(2), BigInt(3)}, BigInt(7)});
  const std::vector<Point> expected{
      oracle::big({0, 0, 0, 0}), oracle::big({0, 0, 1, 2}), oracle::big({0, 1, 0, 3}),
      oracle::big({0, 1, 1, 0}), oracle::big({1, 0, 0, 0}), oracle::big({1, 0, 1, 0}),
      oracle::big({1, 1, 0, 0}), oracle::big({1, 1, 1, 0})};
  EXPECT_EQ(integer_points(enc.instance.polytope), expected);
}

TEST(IntegerPoints, ExplosionGuard) {
  const Polytope p = make({{-1, 0}, {1, 0}, {0, -1}, {0, 1}}, {0, 99, 0, 99});
  EXPECT_THROW(integer_points(p, 9'999), ExplosionGuard);
  EXPECT_EQ(integer_points(p, 10'000).size(), 10'000U);
}

TEST(IntegerPoints, MatchesUnprunedFilterOnRandomPolytopes) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 3), coef(-3, 3), rhs(-4, 8), extra(0, 4);
  std::uniform_int_distribution<int> lo_dist(-3, 1), len_dist(0, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = static_cast<std::size_t>(dim(rng));
    oracle::Vec lo(d), hi(d);
    Polytope p;
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = lo_dist(rng);
      hi[j] = lo[j] + len_dist(rng);
      oracle::Vec up(d, 0), down(d, 0);
      up[j] = 1;
      down[j] = -1;
      p.A.push_back(oracle::big(up));
      p.b.emplace_back(hi[j]);
      p.A.push_back(oracle::big(down));
      p.b.emplace_back(-lo[j]);
    }
    for (int k = extra(rng); k > 0; --k) {
      oracle::Vec row(d);
      for (auto& c : row) c = coef(rng);
      p.A.push_back(oracle::big(row));
      p.b.emplace_back(rhs(rng));
    }
    std::vector<Point> expected;
    for (const auto& x : oracle::filter_box(p, lo, hi)) expected.push_back(oracle::big(x));
    const auto got = integer_points(p);
    ASSERT_EQ(got, expected) << "trial " << trial;

    const Box box = bounding_box(p);
    for (const Point& x : got) {
      for (std::size_t j = 0; j < d; ++j) {
        EXPECT_LE(box.lower[j], x[j]);
        EXPECT_LE(x[j], box.upper[j]);
      }
    }
  }
}

}  // namespace
}  // namespace intcone
