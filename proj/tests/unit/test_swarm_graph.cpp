#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "contam/errors.hpp"
#include "contam/swarm_graph.hpp"

using namespace contam;

namespace {

std::vector<AgentSnapshot> healthy_at(std::initializer_list<Vec2> pts) {
  std::vector<AgentSnapshot> out;
  AgentId id = 1;
  for (auto p : pts) out.push_back({id++, p, Health::Healthy});
  return out;
}

WorldConfig band(double s_min, double s_max, double d_r) {
  WorldConfig cfg;
  cfg.s_min = s_min;
  cfg.s_max = s_max;
  cfg.d_r = d_r;
  return cfg;
}

}  // namespace

TEST(ObservationGraph, SingleAgent) {
  const auto agents = healthy_at({{0, 0}});
  const auto g = build_observation_graph(agents, WorldConfig{});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.observed_set(1), std::vector<AgentId>{1});
}

TEST(ObservationGraph, MiddleBodyBlocksLine) {
  const auto agents = healthy_at({{0, 0}, {3, 0}, {6, 0}});
  const auto g = build_observation_graph(agents, WorldConfig{});
  EXPECT_EQ(g.edges(), (std::vector<IdPair>{{1, 2}, {2, 3}}));
}

TEST(ObservationGraph, ClearSightAcrossOffsetBody) {
  const auto agents = healthy_at({{-1.25, 0}, {1.25, 0}, {0, -1.1}});
  const auto g = build_observation_graph(agents, band(1, 3, 0.5));
  EXPECT_TRUE(g.observes(1, 2));
  EXPECT_EQ(g.observed_set(1), (std::vector<AgentId>{1, 2, 3}));
}

TEST(ObservationGraph, InclusiveUpperBound) {
  const auto agents = healthy_at({{3, 0}, {-3, 0}, {0, 3}});
  const auto g = build_observation_graph(agents, WorldConfig{});
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(ObservationGraph, Errors) {
  EXPECT_THROW(build_observation_graph(healthy_at({{0, 0}, {0.2, 0}}), WorldConfig{}), GeometryError);
  std::vector<AgentSnapshot> dup{{1, {0, 0}, Health::Healthy}, {1, {3, 0}, Health::Healthy}};
  EXPECT_THROW(build_observation_graph(dup, WorldConfig{}), ValidationError);
  EXPECT_THROW(build_observation_graph(healthy_at({{0, 0}, {NAN, 0}}), WorldConfig{}), ValidationError);
}

TEST(ObservationGraph, SymmetricOnRandomWorlds) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<AgentSnapshot> agents;
    while (agents.size() < 40) {
      const Vec2 p{u(rng), u(rng)};
      if (std::all_of(agents.begin(), agents.end(), [&](const auto& a) { return distance(a.pos, p) > 0.5; })) {
        agents.push_back({static_cast<AgentId>(agents.size() + 1), p, Health::Healthy});
      }
    }
    const auto g = build_observation_graph(agents, WorldConfig{});
    for (const auto& [a, b] : g.edges()) {
      EXPECT_TRUE(g.observes(a, b));
      EXPECT_TRUE(g.observes(b, a));
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
      for (std::size_t j = i + 1; j < agents.size(); ++j) {
        std::vector<Vec2> blockers;
        for (std::size_t k = 0; k < agents.size(); ++k) {
          if (k != i && k != j) blockers.push_back(agents[k].pos);
        }
        EXPECT_EQ(g.observes(agents[i].id, agents[j].id),
                  can_observe(agents[i].pos, agents[j].pos, blockers, WorldConfig{}));
      }
    }
  }
}

TEST(Components, PartitionAndCrossEdges) {
  // Two healthy groups and three contaminated groups, linked only across states.
  std::vector<AgentSnapshot> agents{
      {1, {10, 10}, Health::Healthy},      {2, {13, 10}, Health::Healthy},
      {3, {16, 10}, Health::Contaminated}, {4, {19, 10}, Health::Contaminated},
      {5, {22, 10}, Health::Healthy},      {6, {25, 10}, Health::Contaminated},
      {7, {10, 14}, Health::Contaminated}, {8, {40, 40}, Health::Healthy},
  };
  const auto g = build_observation_graph(agents, WorldConfig{});
  const auto cg = connected_components(g, agents);
  std::size_t total = 0;
  for (const auto& c : cg.components) {
    total += c.size();
    EXPECT_TRUE(c.is_connected());
    for (auto id : c.members()) {
      const auto it = std::find_if(agents.begin(), agents.end(), [&](const auto& a) { return a.id == id; });
      EXPECT_EQ(it->state, c.state());
    }
  }
  EXPECT_EQ(total, agents.size());
  EXPECT_EQ(cg.components.size(), 6u);
  for (const auto& [a, b] : cg.adjacency) {
    EXPECT_NE(cg.components[a].state(), cg.components[b].state());
  }
  EXPECT_EQ(cg.components[cg.component_of(1)].members().size(), 2u);
  EXPECT_EQ(cg.components[cg.component_of(8)].members().size(), 1u);
}

TEST(Components, OutOfRangePairIsTwoSingletons) {
  const auto agents = healthy_at({{0, 0}, {10, 0}});
  const auto cg = connected_components(build_observation_graph(agents, WorldConfig{}), agents);
  EXPECT_EQ(cg.components.size(), 2u);
}

TEST(ConnectivityFactor, Values) {
  const IdPair tri[] = {{1, 2}, {2, 3}, {1, 3}};
  const ComponentView clique(Health::Healthy, {1, 2, 3}, tri);
  EXPECT_EQ(connectivity_factor(2, clique), 2);
  const ComponentView single(Health::Healthy, {4}, {});
  EXPECT_EQ(connectivity_factor(4, single), 0);
  EXPECT_THROW(connectivity_factor(9, clique), LookupError);
}

TEST(ConnectivityFactor, RemovalNeverIncreases) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 12);
  std::vector<AgentSnapshot> agents;
  while (agents.size() < 30) {
    const Vec2 p{u(rng), u(rng)};
    if (std::all_of(agents.begin(), agents.end(), [&](const auto& a) { return distance(a.pos, p) > 0.5; })) {
      agents.push_back({static_cast<AgentId>(agents.size() + 1), p, Health::Healthy});
    }
  }
  auto cf = [](const std::vector<AgentSnapshot>& w) {
    const auto cg = connected_components(build_observation_graph(w, WorldConfig{}), w);
    std::map<AgentId, int> out;
    for (const auto& c : cg.components) {
      for (auto id : c.members()) out[id] = c.connectivity_factor(id);
    }
    return out;
  };
  const auto before = cf(agents);
  for (std::size_t drop = 0; drop < agents.size(); ++drop) {
    auto fewer = agents;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
    // Removing a body can reveal hidden agents, so compare against a world
    // where the removed agent stays as an opposing-state occluder.
    auto relabeled = agents;
    relabeled[drop].state = Health::Contaminated;
    const auto after = cf(relabeled);
    for (const auto& [id, v] : after) {
      if (id == agents[drop].id) continue;
      EXPECT_LE(v, before.at(id));
    }
  }
}

TEST(Fence, Singleton) {
  const auto agents = healthy_at({{0, 0}});
  const auto cg = connected_components(build_observation_graph(agents, WorldConfig{}), agents);
  EXPECT_EQ(fence(cg.components[0], agents, WorldConfig{}), std::vector<AgentId>{1});
}

TEST(Fence, ThirteenAgentLayout) {
  const auto agents = healthy_at({{0, 0},
                                  {0.6, 0},
                                  {0, 0.6},
                                  {-0.6, 0},
                                  {0, -0.6},
                                  {1.201, 0.497},
                                  {0.497, 1.201},
                                  {-0.497, 1.201},
                                  {-1.201, 0.497},
                                  {-1.201, -0.497},
                                  {-0.497, -1.201},
                                  {0.497, -1.201},
                                  {1.201, -0.497}});
  const auto cfg = band(0.5, 1.5, 0.25);
  const auto cg = connected_components(build_observation_graph(agents, cfg), agents);
  ASSERT_EQ(cg.components.size(), 1u);
  EXPECT_EQ(fence(cg.components[0], agents, cfg),
            (std::vector<AgentId>{6, 7, 8, 9, 10, 11, 12, 13}));
}

TEST(Fence, FourAgentStarAllBare) {
  const auto agents = healthy_at({{0, 0}, {-0.4, 0.4}, {-0.4, -0.4}, {-1.7, 0}});
  const auto cfg = band(1, 3, 0.5);
  const auto cg = connected_components(build_observation_graph(agents, cfg), agents);
  ASSERT_EQ(cg.components.size(), 1u);
  EXPECT_EQ(fence(cg.components[0], agents, cfg), (std::vector<AgentId>{1, 2, 3, 4}));
}

TEST(Fence, NestedSamplingNeverLosesVerdict) {
  const auto agents = healthy_at({{0, 0}, {3, 0}, {1.5, 2.5}, {1.5, -2.5}, {4.5, 2.5}, {-1.5, 2.6}});
  WorldConfig cfg;
  const auto cg = connected_components(build_observation_graph(agents, cfg), agents);
  for (const auto& comp : cg.components) {
    for (int k = 8; k <= 512; k *= 2) {
      cfg.fence_samples = k;
      const auto coarse = fence(comp, agents, cfg);
      cfg.fence_samples = 2 * k;
      const auto fine = fence(comp, agents, cfg);
      for (auto id : coarse) EXPECT_NE(std::find(fine.begin(), fine.end(), id), fine.end());
    }
  }
}
