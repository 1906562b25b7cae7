#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "contam/bounds.hpp"
#include "contam/errors.hpp"
#include "contam/swarm_graph.hpp"
#include "contam/wpc.hpp"

using namespace contam;

namespace {

WorldConfig with(double s_min, double s_max, double d_r) {
  WorldConfig cfg;
  cfg.s_min = s_min;
  cfg.s_max = s_max;
  cfg.d_r = d_r;
  return cfg;
}

}  // namespace

TEST(Bounds, MaxConnectivityFactor) {
  EXPECT_EQ(max_connectivity_factor(WorldConfig{}), 75);
  EXPECT_EQ(max_connectivity_factor(with(1, 3, 0.25)), 37);
  // s_max == d_r is outside the valid config range; the closed form still gives 2.
  EXPECT_EQ(dense_circle_capacity(0.25, 0.25), 2);
}

TEST(Bounds, WeakPointBound) {
  EXPECT_EQ(weak_point_bound(WorldConfig{}), 37);
  EXPECT_EQ(weak_point_bound(with(1, 3, 0.25)), 18);
  EXPECT_EQ(guarded_floor(std::numbers::pi / dense_arc_angle(0.25, 0.25)), 1);
}

TEST(Bounds, WeakPointBelowMaxCf) {
  for (double s_max = 1.0; s_max < 12.0; s_max += 0.37) {
    for (double d_r : {0.05, 0.1, 0.25, 0.4}) {
      const auto cfg = with(d_r * 1.5, s_max, d_r);
      EXPECT_LE(weak_point_bound(cfg), max_connectivity_factor(cfg));
    }
  }
}

TEST(Bounds, ConcealedSector) {
  const WorldConfig cfg;
  const auto three = concealed_sector(3.0, cfg);
  EXPECT_NEAR(three.beta, 0.8222757246446954, 1e-12);
  EXPECT_EQ(three.count, 4);
  const auto six = concealed_sector(6.0, cfg);
  EXPECT_NEAR(six.beta, 0.5793739879942389, 1e-12);
  EXPECT_EQ(six.count, 6);
  EXPECT_LT(concealed_sector(50.0, cfg).beta, six.beta);
  EXPECT_THROW(concealed_sector(0.25, cfg), DomainError);
}

TEST(Bounds, Odc) {
  const auto d = odc(WorldConfig{});
  EXPECT_DOUBLE_EQ(d.radius, 3.0);
  EXPECT_EQ(d.count, 37);
  EXPECT_EQ(d.positions.size(), 37u);
  const auto small = odc(with(1, 4, 0.25));
  EXPECT_DOUBLE_EQ(small.radius, 2.0);
  EXPECT_EQ(small.count, 25);
  EXPECT_EQ(odc(with(0.4, 0.5, 0.25)).count, 2);
}

TEST(Bounds, DenseCircleWpcSmall) {
  const WorldConfig cfg;
  EXPECT_EQ(dense_circle_wpc(3.0, 1, cfg), 1);
  // Three agents a dense arc apart are inside each other's s_min; a wider band
  // makes them a mutually observing triangle.
  const auto near = with(0.1, 6, 0.25);
  EXPECT_EQ(dense_circle_wpc(0.6, 3, near), 3);
  EXPECT_THROW(dense_circle_wpc(3.0, 38, cfg), CapacityError);
}

TEST(Bounds, OdcFenceCfSpreadAtMostTwo) {
  const WorldConfig cfg;
  const auto d = odc(cfg);
  std::vector<AgentSnapshot> world;
  for (std::size_t i = 0; i < d.positions.size(); ++i) {
    world.push_back({static_cast<AgentId>(i + 1), d.positions[i], Health::Healthy});
  }
  const auto cg = connected_components(build_observation_graph(world, cfg), world);
  ASSERT_EQ(cg.components.size(), 1u);
  const auto& comp = cg.components[0];
  int lo = 1 << 30, hi = 0;
  for (auto id : fence(comp, world, cfg)) {
    lo = std::min(lo, comp.connectivity_factor(id));
    hi = std::max(hi, comp.connectivity_factor(id));
  }
  EXPECT_LE(hi - lo, 2);
  EXPECT_LE(hi, max_connectivity_factor(cfg));
}

TEST(Bounds, SurroundedAgentCfBelowFormula) {
  const WorldConfig cfg;
  const auto ring = dense_circle_positions(dense_circle_capacity(cfg.s_max, cfg.d_r), cfg.s_max,
                                           {20, 20}, cfg.d_r);
  std::vector<AgentSnapshot> world{{0, {20, 20}, Health::Healthy}};
  for (std::size_t i = 0; i < ring.size(); ++i) {
    world.push_back({static_cast<AgentId>(i + 1), ring[i], Health::Healthy});
  }
  const auto g = build_observation_graph(world, cfg);
  EXPECT_LE(static_cast<int>(g.observed_set(0).size()) - 1, max_connectivity_factor(cfg));
}
