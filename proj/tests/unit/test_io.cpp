#include <gtest/gtest.h>

#include "contam/errors.hpp"
#include "contam/io.hpp"
#include "contam/strategies.hpp"

using namespace contam;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(CONTAM_TEST_DATA_DIR) / name; }

}  // namespace

TEST(Io, WorldConfigOverrides) {
  const auto cfg = world_config_from_json(Json{{"s_max", 4.0}, {"t_max", 10}});
  EXPECT_DOUBLE_EQ(cfg.s_max, 4.0);
  EXPECT_EQ(cfg.t_max, 10);
  EXPECT_DOUBLE_EQ(cfg.s_min, 2.0);
  EXPECT_THROW(world_config_from_json(Json{{"speed", 1}}), ConfigError);
  EXPECT_THROW(world_config_from_json(Json{{"s_max", "far"}}), ConfigError);
  EXPECT_THROW(world_config_from_json(Json{{"s_min", 9.0}}), ConfigError);
  const auto round = world_config_from_json(to_json(cfg));
  EXPECT_DOUBLE_EQ(round.s_max, 4.0);
}

TEST(Io, MissingFileIsIoError) {
  EXPECT_THROW(read_json_file(data("does_not_exist.json")), IoError);
}

TEST(Io, AbstractComponentReport) {
  const auto file = component_from_json(read_json_file(data("eight_agent_edges.json")));
  const auto report = wpc_report(file);
  EXPECT_EQ(report["wpc"], 3);
  EXPECT_EQ(report["trace"]["iterations"].size(), 8u);
  EXPECT_EQ(report["trace"]["iterations"][6]["c"], 10);
}

TEST(Io, GeometricComponentReport) {
  const auto file = component_from_json(read_json_file(data("thirteen_agents.json")));
  ASSERT_TRUE(file.geometric);
  const auto report = wpc_report(file);
  EXPECT_EQ(report["fence"], Json({6, 7, 8, 9, 10, 11, 12, 13}));
  EXPECT_EQ(report["members"].size(), 13u);
}

TEST(Io, FourAgentStarComponent) {
  const auto file = component_from_json(read_json_file(data("four_agents.json")));
  const auto report = wpc_report(file);
  EXPECT_EQ(report["members"].size(), 4u);
  EXPECT_EQ(report["fence"], Json({1, 2, 3, 4}));
}

TEST(Io, InitialStates) {
  const auto explicit_state = initial_state_from_json(read_json_file(data("triangle_init.json")));
  EXPECT_EQ(explicit_state.init.agents.size(), 3u);
  EXPECT_EQ(explicit_state.init.agents[2].state, Health::Contaminated);
  const auto counts = initial_state_from_json(read_json_file(data("counts_init.json")));
  EXPECT_EQ(counts.init.n_healthy, 12);
  EXPECT_EQ(counts.cfg.t_max, 50);
  EXPECT_THROW(initial_state_from_json(Json{{"n_healthy", 3}}), ConfigError);
}

TEST(Io, ExperimentConfig) {
  const auto cfg = experiment_config_from_json(read_json_file(data("experiment_small.json")));
  EXPECT_EQ(cfg.agents_per_side, (std::vector<int>{10, 20}));
  EXPECT_EQ(cfg.world.t_max, 300);
  EXPECT_THROW(experiment_config_from_json(read_json_file(data("experiment_bad.json"))), ConfigError);
}

TEST(Io, MessageJson) {
  const Message m{4, {1, 2}, CircleProposal{7, {1, 2, 4}}};
  const auto j = to_json(m);
  EXPECT_EQ(j["kind"], "circle_proposal");
  EXPECT_EQ(j["payload"]["members"], Json({1, 2, 4}));
}

TEST(Io, TrajectoryRecord) {
  const WorldConfig cfg;
  const auto random = make_strategy("random", cfg);
  World world(cfg, {{1, {10, 10}, Health::Healthy}, {2, {13, 10}, Health::Contaminated}}, *random,
              *random, 1);
  world.step();
  const auto rec = trajectory_record(world);
  EXPECT_EQ(rec["step"], 1);
  EXPECT_EQ(rec["healthy"], 2);
  EXPECT_EQ(rec["agents"].size(), 2u);
  EXPECT_EQ(rec["agents"][0]["formation"], "single");
}
