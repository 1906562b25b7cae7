#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "contam/engine.hpp"
#include "contam/harness.hpp"
#include "contam/messages.hpp"
#include "contam/swarm_graph.hpp"
#include "contam/wpc.hpp"

namespace contam {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Throws IoError when unreadable, ConfigError when malformed.
Json read_json_file(const std::filesystem::path& path);

/// Applies the keys present in `j` over `base`; unknown keys raise ConfigError.
WorldConfig world_config_from_json(const Json& j, WorldConfig base = {});
Json to_json(const WorldConfig& cfg);

std::vector<AgentSnapshot> agents_from_json(const Json& j);
Json to_json(const AgentSnapshot& a);

/// {cfg?, agents:[...]} or {cfg?, n_healthy, n_contaminated}.
struct InitialStateFile {
  WorldConfig cfg;
  InitialState init;
};
InitialStateFile initial_state_from_json(const Json& j);

/// Component file: either {cfg?, agents:[...], focus?} with geometric fence,
/// or {edges:[[a,b],...], all_bare?} for an abstract component.
struct ComponentFile {
  WorldConfig cfg;
  std::vector<AgentSnapshot> world;  // empty for abstract components
  std::optional<ComponentView> component;
  bool geometric = false;
};
ComponentFile component_from_json(const Json& j);

/// WPC value, fence and trace of the component as JSON.
Json wpc_report(const ComponentFile& file);

Json to_json(const WpcTrace& trace);
Json to_json(const Message& m);
Json to_json(const Payload& p);

ExperimentConfig experiment_config_from_json(const Json& j);

/// One trajectory record: step, counts, message count and every agent.
Json trajectory_record(const World& world);

}  // namespace contam
