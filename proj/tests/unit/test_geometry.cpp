#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "contam/errors.hpp"
#include "contam/geometry.hpp"

using namespace contam;

TEST(Distance, Basics) {
  EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(distance({1, 1}, {1, 1}), 0.0);
  EXPECT_DOUBLE_EQ(distance({-1.25, 0}, {1.25, 0}), 2.5);
}

TEST(SegmentDisk, Cases) {
  EXPECT_TRUE(segment_intersects_disk({-1.25, 0}, {1.25, 0}, {0, 0}, 0.125));
  EXPECT_FALSE(segment_intersects_disk({-1.25, 0}, {1.25, 0}, {0, -1.1}, 0.125));
  EXPECT_TRUE(segment_intersects_disk({0, 0}, {0, 0}, {0, 0.1}, 0.2));
  // Tangent counts as touching.
  EXPECT_TRUE(segment_intersects_disk({-1, 0}, {1, 0}, {0, 0.5}, 0.5));
  // Closest point beyond an endpoint.
  EXPECT_FALSE(segment_intersects_disk({0, 0}, {1, 0}, {1.5, 0}, 0.4));
}

TEST(CanObserve, Band) {
  const WorldConfig cfg;
  EXPECT_TRUE(can_observe({0, 0}, {3, 0}, {}, cfg));
  EXPECT_FALSE(can_observe({0, 0}, {1, 0}, {}, cfg));
  EXPECT_FALSE(can_observe({0, 0}, {2, 0}, {}, cfg));  // open at s_min
  EXPECT_TRUE(can_observe({0, 0}, {6, 0}, {}, cfg));   // closed at s_max
  EXPECT_FALSE(can_observe({0, 0}, {6.001, 0}, {}, cfg));
}

TEST(CanObserve, Occlusion) {
  WorldConfig cfg;
  cfg.s_min = 1;
  cfg.s_max = 3;
  cfg.d_r = 0.5;
  const Vec2 blocker[] = {{0, 0}};
  EXPECT_FALSE(can_observe({-1.25, 0}, {1.25, 0}, blocker, cfg));
  const Vec2 aside[] = {{0, -1.1}};
  EXPECT_TRUE(can_observe({-1.25, 0}, {1.25, 0}, aside, cfg));
}

TEST(CanObserve, SymmetricAndMonotoneInBlockers) {
  const WorldConfig cfg;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-6, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    std::vector<Vec2> blockers;
    for (int k = 0; k < 3; ++k) blockers.push_back({u(rng) * 0.5, u(rng) * 0.5});
    const bool ab = can_observe(a, b, blockers, cfg);
    EXPECT_EQ(ab, can_observe(b, a, blockers, cfg));
    auto more = blockers;
    more.push_back({u(rng) * 0.5, u(rng) * 0.5});
    if (!ab) EXPECT_FALSE(can_observe(a, b, more, cfg));
  }
}

TEST(DenseCircle, Capacity) {
  EXPECT_EQ(dense_circle_capacity(0.25, 0.25), 2);
  EXPECT_EQ(dense_circle_capacity(3.0, 0.25), 37);
  EXPECT_EQ(dense_circle_capacity(6.0, 0.25), 75);
  EXPECT_EQ(dense_circle_capacity(2.0, 0.25), 25);
  EXPECT_THROW(dense_circle_capacity(0.2, 0.25), DomainError);
}

TEST(DenseCircle, CapacityNonDecreasing) {
  int prev = dense_circle_capacity(0.25, 0.25);
  for (double r = 0.25; r <= 12.0; r += 0.01) {
    const int c = dense_circle_capacity(r, 0.25);
    EXPECT_GE(c, prev) << "radius " << r;
    prev = c;
  }
}

TEST(DenseCircle, Positions) {
  const auto two = dense_circle_positions(2, 0.25, {0, 0}, 0.25);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_NEAR(distance(two[0], two[1]), 0.5, 1e-12);

  const auto full = dense_circle_positions(37, 3.0, {1, 2}, 0.25);
  ASSERT_EQ(full.size(), 37u);
  for (std::size_t i = 0; i < full.size(); ++i) {
    EXPECT_NEAR(distance(full[i], {1, 2}), 3.0, 1e-9);
    if (i + 1 < full.size()) EXPECT_NEAR(distance(full[i], full[i + 1]), 0.5, 1e-9);
  }

  const auto four = dense_circle_positions(4, 3.0, {0, 0}, 0.25);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(distance(four[i], four[i + 1]), 0.5, 1e-9);
  EXPECT_GT(distance(four[3], four[0]), 1.0);

  EXPECT_THROW(dense_circle_positions(38, 3.0, {0, 0}, 0.25), CapacityError);
}

TEST(WorldConfig, Validate) {
  WorldConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.s_min = 7;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.d_r = 3;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.fence_samples = 4;
  EXPECT_THROW(cfg.validate(), ConfigError);
}
