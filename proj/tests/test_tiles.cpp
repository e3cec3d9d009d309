#include "lcaframe/error.hpp"
#include "lcaframe/tiles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace lcaframe;

namespace {

TileSpec twin_dragon(int r) { return {{{{1, -1}, {1, 1}}}, {1, 0}, r}; }
TileSpec second_matrix(int r) { return {{{{0, 2}, {-1, 0}}}, {0, 1}, r}; }

std::vector<std::array<double, 2>> points(const TileCloud& c) {
  std::vector<std::array<double, 2>> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.point(i));
  return out;
}

}  // namespace

TEST(Tiles, TwinDragonFirstSteps) {
  using P = std::vector<std::array<double, 2>>;
  EXPECT_EQ(points(tile_iterate(twin_dragon(0))), (P{{0, 0}}));
  EXPECT_EQ(points(tile_iterate(twin_dragon(1))), (P{{0, 0}, {0.5, 0.5}}));
  EXPECT_EQ(points(tile_iterate(twin_dragon(2))), (P{{0, 0}, {0, 0.5}, {0.5, 0.5}, {0.5, 1}}));
}

TEST(Tiles, RecursionMatchesDigitSums) {
  for (int r = 0; r <= 12; ++r) {
    EXPECT_EQ(tile_iterate(twin_dragon(r)).num, tile_digit_sums(twin_dragon(r)).num) << r;
    EXPECT_EQ(tile_iterate(second_matrix(r)).num, tile_digit_sums(second_matrix(r)).num) << r;
  }
}

TEST(Tiles, SelfSimilarity) {
  EXPECT_TRUE(tile_selfsimilarity_check(twin_dragon(2), 1));
  EXPECT_TRUE(tile_selfsimilarity_check(twin_dragon(2), 2));
  auto c = tile_iterate(twin_dragon(6));
  c.num[5][0] += 1;
  EXPECT_FALSE(tile_selfsimilarity_check(twin_dragon(6), c));
}

TEST(Tiles, TwinDragonPointsAreDistinct) {
  EXPECT_EQ(tile_iterate(twin_dragon(16)).size(), std::size_t{1} << 16);
}

TEST(Tiles, PointsInsideRadiusBound) {
  for (const auto& spec : {twin_dragon(12), second_matrix(12)}) {
    const double R = tile_radius_bound(spec);
    auto c = tile_iterate(spec);
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto p = c.point(i);
      EXPECT_LE(std::hypot(p[0], p[1]), R + 1e-12);
    }
  }
}

TEST(Tiles, MeasureEstimates) {
  auto td = tile_measure_estimate(tile_iterate(twin_dragon(16)), 1.0 / 64);
  EXPECT_NEAR(td.estimate, 1.0, 0.15);
  auto sm = tile_measure_estimate(tile_iterate(second_matrix(16)), 1.0 / 64);
  EXPECT_NEAR(sm.estimate, 1.0, 0.15);
  auto one = tile_measure_estimate(tile_iterate(twin_dragon(0)), 1.0 / 64);
  EXPECT_DOUBLE_EQ(one.estimate, 1.0 / 4096);
  EXPECT_THROW(tile_measure_estimate(tile_iterate(twin_dragon(2)), 0.3), Error);
  EXPECT_THROW(tile_measure_estimate(tile_iterate(twin_dragon(2)), 0.0), Error);
}

TEST(Tiles, DigitSets) {
  EXPECT_TRUE(digit_set_complete(twin_dragon(1)));
  EXPECT_TRUE(digit_set_complete(second_matrix(1)));
  // (1, 0) = A^T (0, -1) for the second matrix, although it is outside A Z^2
  TileSpec shared{{{{0, 2}, {-1, 0}}}, {1, 0}, 1};
  EXPECT_FALSE(digit_set_complete(shared));
  EXPECT_THROW(tile_iterate(shared), Error);
  auto sm = tile_measure_estimate(tile_iterate(second_matrix(16)), 1.0 / 64);
  EXPECT_LT(sm.multiplicity_violation, 0.1);
  EXPECT_NEAR(sm.estimate, 1.0, 0.15);
}

TEST(Tiles, Validation) {
  EXPECT_THROW(tile_iterate({{{{1, 0}, {0, 1}}}, {1, 0}, 1}), Error);
  EXPECT_THROW(tile_iterate({{{{1, -1}, {1, 1}}}, {1, 1}, 1}), Error);
  try {
    tile_iterate(twin_dragon(25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
  }
}
