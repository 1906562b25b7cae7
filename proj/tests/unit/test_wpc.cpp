#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "contam/errors.hpp"
#include "contam/swarm_graph.hpp"
#include "contam/wpc.hpp"
#include "graph_fixtures.hpp"

using namespace contam;
using namespace contam::testing;

TEST(Pbf, Values) {
  const auto comp = abstract_component(reference_eight_edges(), true);
  EXPECT_EQ(pbf(1, {}, comp), 3);
  EXPECT_EQ(pbf(7, {1, 8}, comp), 3);
  EXPECT_THROW(pbf(1, {1}, comp), PreconditionError);
  EXPECT_THROW(pbf(42, {}, comp), LookupError);
  const ComponentView lone(Health::Healthy, {5}, {});
  EXPECT_EQ(pbf(5, {}, lone), 1);
}

TEST(IterativeConquer, SingletonAnyRule) {
  const ComponentView lone(Health::Healthy, {5}, {});
  const auto trace = iterative_conquer(lone, [](const auto&, const auto&, int) {
    return std::vector<AgentId>{5};
  });
  EXPECT_EQ(trace.required, 1);
  EXPECT_EQ(trace.iterations.size(), 1u);
}

TEST(IterativeConquer, RuleContract) {
  const auto comp = abstract_component(path_edges(3), true);
  EXPECT_THROW(iterative_conquer(comp, [](const auto&, const auto&, int) { return std::vector<AgentId>{}; }),
               ProtocolError);
  EXPECT_THROW(iterative_conquer(comp, [](const auto&, const auto&, int) { return std::vector<AgentId>{1}; }),
               ProtocolError);
  EXPECT_THROW(iterative_conquer(comp, [](const auto&, const auto&, int) { return std::vector<AgentId>{9}; }),
               ProtocolError);
  EXPECT_THROW(
      iterative_conquer(comp, [](const auto&, const auto&, int) { return std::vector<AgentId>{1, 1}; }),
      ProtocolError);
}

TEST(Wpc, ReferenceEightAgentTrace) {
  const auto comp = abstract_component(reference_eight_edges(), true);
  const auto trace = wpc_trace(comp, exposure_fence());
  EXPECT_EQ(trace.required, 3);
  ASSERT_EQ(trace.iterations.size(), 8u);
  const int expected_c[] = {4, 5, 6, 7, 8, 9, 10, 11};
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(trace.iterations[i].c, expected_c[i]) << "iteration " << i + 1;
    EXPECT_EQ(trace.iterations[i].r, 3) << "iteration " << i + 1;
  }
  EXPECT_EQ(trace.iterations[0].chosen, std::vector<AgentId>{1});
  EXPECT_EQ(trace.effective_subset, std::vector<AgentId>{1});
}

TEST(Wpc, SmallGraphs) {
  EXPECT_EQ(wpc(ComponentView(Health::Healthy, {3}, {})), 1);
  EXPECT_EQ(wpc_abstract(path_edges(2), true), 2);
  EXPECT_EQ(wpc_abstract(complete_edges(3), true), 3);
  EXPECT_EQ(wpc_abstract(star_edges(4), true), 2);
  EXPECT_EQ(wpc_abstract(reference_eight_edges(), true), 3);
  EXPECT_THROW(wpc_abstract(std::vector<IdPair>{{1, 2}, {3, 4}}, true), DomainError);
}

TEST(Wpc, FirstIterationIsCfPlusOne) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto edges = random_connected_edges(rng, 7, 0.4);
    const auto comp = abstract_component(edges, true);
    const auto trace = wpc_trace(comp, exposure_fence());
    const auto first = trace.iterations.front().chosen.front();
    EXPECT_EQ(trace.iterations.front().r, comp.connectivity_factor(first) + 1);
  }
}

TEST(Wpc, TraceBookkeeping) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto comp = abstract_component(random_connected_edges(rng, 8, 0.35), trial % 2 == 0);
    const auto trace = wpc_trace(comp, exposure_fence());
    int c = 0, r = 0;
    for (const auto& it : trace.iterations) {
      EXPECT_GE(it.c, c);
      EXPECT_GE(it.r, r);
      EXPECT_LE(it.r, it.c);
      EXPECT_EQ(it.delta, it.max_bareness - c);
      if (it.delta > 0) r += it.delta, c += it.delta;
      c += static_cast<int>(it.chosen.size());
      EXPECT_EQ(it.c, c);
      EXPECT_EQ(it.r, r);
      EXPECT_EQ(it.c, it.r + static_cast<int>(it.conquered_so_far.size()));
    }
    EXPECT_EQ(trace.required, r);
  }
}

TEST(SequenceCost, PathOfThree) {
  const auto comp = abstract_component(path_edges(3), true);
  EXPECT_EQ(sequence_cost(comp, {{{1}, {2}, {3}}}), 2);
  EXPECT_EQ(sequence_cost(comp, {{{1, 2, 3}}}), 3);
  const ComponentView lone(Health::Healthy, {4}, {});
  EXPECT_EQ(sequence_cost(lone, {{{4}}}), 1);
  EXPECT_THROW(sequence_cost(comp, {{{1}, {2}}}), ValidationError);
  EXPECT_THROW(sequence_cost(comp, {{{1}, {1, 2}, {3}}}), ValidationError);
  EXPECT_THROW(sequence_cost(comp, {{{1}, {}, {2, 3}}}), ValidationError);
}

TEST(AttackingSequence, LengthAndSingular) {
  AttackingSequence s{{{1}, {2, 3}, {}}};
  EXPECT_EQ(s.length(), 2u);
  EXPECT_FALSE(s.is_singular());
  s.steps = {{1}, {2}, {}};
  EXPECT_TRUE(s.is_singular());
}

TEST(TransformSequence, Cases) {
  const auto comp = abstract_component(path_edges(3), true);
  const AttackingSequence singular{{{3}, {2}, {1}}};
  EXPECT_EQ(transform_sequence(comp, singular).steps, singular.steps);
  const auto split = transform_sequence(comp, {{{1, 2, 3}}});
  EXPECT_EQ(split.steps, (std::vector<std::vector<AgentId>>{{1}, {3}, {2}}));
  EXPECT_EQ(sequence_cost(comp, split), 2);
}

TEST(TransformSequence, NeverIncreasesCost) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto comp = abstract_component(random_connected_edges(rng, 8, 0.4), true);
    const auto seq = random_sequence(rng, comp);
    const auto t = transform_sequence(comp, seq);
    EXPECT_TRUE(t.is_singular());
    EXPECT_LE(sequence_cost(comp, t), sequence_cost(comp, seq));
  }
}

TEST(BruteForce, SmallGraphs) {
  EXPECT_EQ(brute_force_min_conquer(ComponentView(Health::Healthy, {1}, {})), 1);
  EXPECT_EQ(brute_force_min_conquer(reference_eight_edges(), true), 3);
  EXPECT_EQ(brute_force_min_conquer(cycle_edges(4), true), 3);
  EXPECT_EQ(brute_force_min_conquer(complete_edges(3), true), 3);
  EXPECT_THROW(brute_force_min_conquer(path_edges(9), true), SizeError);
}

TEST(BruteForce, MatchesGreedyOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto edges = random_connected_edges(rng, 6, 0.5);
    EXPECT_EQ(wpc_abstract(edges, true), brute_force_min_conquer(edges, true));
  }
}

TEST(Monotonic, Cases) {
  EXPECT_TRUE(is_monotonic(ComponentView(Health::Healthy, {1}, {})));
  // Interior five-clique with a single exposed leaf: the clique member next to
  // the leaf forces extra allocation while not on the original fence.
  auto edges = complete_edges(5);
  edges.push_back({1, 6});
  auto comp = abstract_component(edges, true);
  const AgentId leaf[] = {6};
  comp.set_fence(leaf);
  EXPECT_FALSE(is_monotonic(comp));
  EXPECT_TRUE(is_monotonic(abstract_component(edges, true)));
}
