#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "contam/contam.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 1, kIo = 2, kFailure = 3 };

int cmd_run(const std::string& config_path, std::optional<int> jobs) {
  auto cfg = contam::experiment_config_from_json(contam::read_json_file(config_path));
  if (jobs) cfg.jobs = *jobs;
  const auto result = contam::run_batch(cfg, contam::resolve_jobs(cfg.jobs));
  contam::write_outputs(cfg, result);
  contam::write_aggregate_csv(std::cout, result.aggregates);
  return kOk;
}

struct GameArgs {
  std::uint64_t seed = 1;
  int n = 50;
  std::string healthy = "circle";
  std::string contaminated = "circle";
  std::string trajectory;
  std::string init;
  std::string world;
};

int cmd_game(const GameArgs& a) {
  contam::WorldConfig cfg;
  contam::InitialState init;
  init.n_healthy = a.n;
  init.n_contaminated = a.n;
  if (!a.world.empty()) cfg = contam::world_config_from_json(contam::read_json_file(a.world));
  if (!a.init.empty()) {
    auto f = contam::initial_state_from_json(contam::read_json_file(a.init));
    cfg = f.cfg;
    init = std::move(f.init);
  }
  cfg.validate();
  const auto healthy = contam::make_strategy(a.healthy, cfg);
  const auto contaminated = contam::make_strategy(a.contaminated, cfg);

  std::ofstream traj;
  if (!a.trajectory.empty()) {
    traj.open(a.trajectory, std::ios::binary);
    if (!traj) throw contam::IoError("cannot open " + a.trajectory + " for writing");
  }
  contam::StepObserver observer;
  if (traj.is_open()) {
    observer = [&traj](const contam::World& w) { traj << contam::trajectory_record(w).dump() << '\n'; };
  }
  const auto result = contam::run_game(cfg, *healthy, *contaminated, init, a.seed, observer);
  if (traj.is_open() && !traj.flush()) throw contam::IoError("failed writing " + a.trajectory);

  const auto fin = result.final_counts();
  contam::Json out = {{"seed", a.seed},
                      {"strategy_healthy", a.healthy},
                      {"strategy_contaminated", a.contaminated},
                      {"steps", result.steps},
                      {"termination", contam::to_string(result.termination)},
                      {"final_healthy", fin.healthy},
                      {"final_contaminated", fin.contaminated},
                      {"final_healthy_pct", result.final_healthy_pct}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_wpc(const std::string& path) {
  const auto file = contam::component_from_json(contam::read_json_file(path));
  std::cout << contam::wpc_report(file).dump(2) << '\n';
  return kOk;
}

int cmd_bounds(const contam::WorldConfig& cfg) {
  cfg.validate();
  const auto sector = contam::concealed_sector(cfg.s_max / 2.0, cfg);
  const auto o = contam::odc(cfg);
  contam::Json out = {{"s_min", cfg.s_min},
                      {"s_max", cfg.s_max},
                      {"d_r", cfg.d_r},
                      {"max_connectivity_factor", contam::max_connectivity_factor(cfg)},
                      {"weak_point_bound", contam::weak_point_bound(cfg)},
                      {"odc", {{"radius", o.radius}, {"count", o.count}}},
                      {"concealed_sector", {{"radius", o.radius}, {"beta", sector.beta},
                                            {"count", sector.count}}},
                      {"max_clique_size", cfg.max_clique_size}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contamination game simulator and analysis tools"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a batch experiment from a JSON config");
  std::string config_path;
  std::optional<int> jobs;
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--jobs", jobs, "Worker threads (CONTAM_JOBS overrides)")->check(CLI::PositiveNumber);

  auto* game = app.add_subcommand("game", "Play one game and print its summary");
  GameArgs g;
  game->add_option("--seed", g.seed, "RNG seed");
  game->add_option("--n", g.n, "Agents per side")->check(CLI::PositiveNumber);
  game->add_option("--healthy", g.healthy, "Healthy strategy")
      ->check(CLI::IsMember({"circle", "clique", "potential", "random"}));
  game->add_option("--contaminated", g.contaminated, "Contaminated strategy")
      ->check(CLI::IsMember({"circle", "clique", "potential", "random"}));
  game->add_option("--trajectory", g.trajectory, "Write a JSON-lines trajectory");
  game->add_option("--init", g.init, "Initial-state file (JSON)");
  game->add_option("--world", g.world, "World config overrides (JSON)");

  auto* wpc = app.add_subcommand("wpc", "WPC value and trace of a component file");
  std::string component;
  wpc->add_option("--component", component, "Component file (JSON)")->required();

  auto* bounds = app.add_subcommand("bounds", "Capacity bounds for a sensing configuration");
  contam::WorldConfig bcfg;
  bounds->add_option("--smin", bcfg.s_min, "Minimal sensing distance");
  bounds->add_option("--smax", bcfg.s_max, "Maximal sensing distance");
  bounds->add_option("--dr", bcfg.d_r, "Agent diameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*run) return cmd_run(config_path, jobs);
    if (*game) return cmd_game(g);
    if (*wpc) return cmd_wpc(component);
    if (*bounds) return cmd_bounds(bcfg);
  } catch (const contam::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const contam::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
