#include "contam/io.hpp"

#include <fstream>
#include <set>
#include <string>

#include "contam/errors.hpp"

namespace contam {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

namespace {

template <class T>
T get(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

Json vec(Vec2 v) { return Json::array({v.x, v.y}); }

Json ids(const std::vector<AgentId>& v) { return Json(v); }

}  // namespace

WorldConfig world_config_from_json(const Json& j, WorldConfig base) {
  if (j.is_null()) return base;
  if (!j.is_object()) throw ConfigError("world config must be an object");
  static const std::set<std::string> known = {
      "s_min",          "s_max",           "d_r",        "arena_width",    "arena_height",
      "v_max",          "t_max",           "stagnation_window", "max_clique_size",
      "fence_samples",  "eps",             "convergence_patience"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown world config key '" + key + "'");
  }
  auto real = [&](const char* k, double& f) { if (j.contains(k)) f = get<double>(j, k); };
  auto integer = [&](const char* k, int& f) { if (j.contains(k)) f = get<int>(j, k); };
  real("s_min", base.s_min);
  real("s_max", base.s_max);
  real("d_r", base.d_r);
  real("arena_width", base.arena_width);
  real("arena_height", base.arena_height);
  real("v_max", base.v_max);
  integer("t_max", base.t_max);
  integer("stagnation_window", base.stagnation_window);
  integer("max_clique_size", base.max_clique_size);
  integer("fence_samples", base.fence_samples);
  real("eps", base.eps);
  integer("convergence_patience", base.convergence_patience);
  base.validate();
  return base;
}

Json to_json(const WorldConfig& c) {
  return {{"s_min", c.s_min},
          {"s_max", c.s_max},
          {"d_r", c.d_r},
          {"arena_width", c.arena_width},
          {"arena_height", c.arena_height},
          {"v_max", c.v_max},
          {"t_max", c.t_max},
          {"stagnation_window", c.stagnation_window},
          {"max_clique_size", c.max_clique_size},
          {"fence_samples", c.fence_samples},
          {"eps", c.eps},
          {"convergence_patience", c.convergence_patience}};
}

std::vector<AgentSnapshot> agents_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("'agents' must be an array");
  std::vector<AgentSnapshot> out;
  for (const auto& a : j) {
    AgentSnapshot s;
    s.id = get<AgentId>(a, "id");
    s.pos = {get<double>(a, "x"), get<double>(a, "y")};
    try {
      s.state = a.contains("state") ? parse_health(get<std::string>(a, "state")) : Health::Healthy;
    } catch (const ValidationError& e) {
      throw ConfigError(e.what());
    }
    out.push_back(s);
  }
  return out;
}

Json to_json(const AgentSnapshot& a) {
  return {{"id", a.id}, {"x", a.pos.x}, {"y", a.pos.y}, {"state", to_string(a.state)}};
}

InitialStateFile initial_state_from_json(const Json& j) {
  InitialStateFile f;
  f.cfg = world_config_from_json(j.value("cfg", Json()));
  if (j.contains("agents")) {
    f.init.agents = agents_from_json(j.at("agents"));
  } else {
    f.init.n_healthy = get<int>(j, "n_healthy");
    f.init.n_contaminated = get<int>(j, "n_contaminated");
  }
  return f;
}

ComponentFile component_from_json(const Json& j) {
  ComponentFile f;
  if (j.contains("edges")) {
    const auto edges = get<std::vector<IdPair>>(j, "edges");
    const bool all_bare = j.value("all_bare", true);
    try {
      f.component = abstract_component(edges, all_bare);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    return f;
  }
  f.geometric = true;
  f.cfg = world_config_from_json(j.value("cfg", Json()));
  f.world = agents_from_json(j.at("agents"));
  if (f.world.empty()) throw ConfigError("component file lists no agents");
  const AgentId focus = j.value("focus", f.world.front().id);
  try {
    const auto graph = build_observation_graph(f.world, f.cfg);
    auto comps = connected_components(graph, f.world);
    f.component = comps.components.at(comps.component_of(focus));
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return f;
}

Json to_json(const WpcTrace& trace) {
  Json its = Json::array();
  for (const auto& r : trace.iterations) {
    its.push_back({{"chosen", ids(r.chosen)},
                   {"max_bareness", r.max_bareness},
                   {"delta", r.delta},
                   {"c", r.c},
                   {"r", r.r}});
  }
  return {{"required", trace.required},
          {"effective_subset", ids(trace.effective_subset)},
          {"iterations", its}};
}

Json wpc_report(const ComponentFile& file) {
  const auto& comp = *file.component;
  Json out;
  out["members"] = Json(std::vector<AgentId>(comp.members().begin(), comp.members().end()));
  out["state"] = to_string(comp.state());
  if (file.geometric) {
    const auto oracle = std::make_shared<const FenceOracle>(comp, file.world, file.cfg);
    const auto provider = geometric_fence(oracle);
    const auto trace = wpc_trace(comp, provider);
    out["fence"] = ids(oracle->fence());
    out["wpc"] = trace.required;
    out["trace"] = to_json(trace);
    out["monotonic"] = is_monotonic(comp, provider);
  } else {
    const auto trace = wpc_trace(comp, exposure_fence());
    out["fence"] = ids(comp.fence());
    out["wpc"] = trace.required;
    out["trace"] = to_json(trace);
    out["monotonic"] = is_monotonic(comp);
  }
  return out;
}

namespace {

Json circle_json(const CirclePublication& c) {
  return {{"circle_id", c.circle_id}, {"members", ids(c.members)}, {"center", vec(c.center)}};
}

Json proposal_json(const MergeProposal& p) {
  return {{"proposer", p.proposer},
          {"target", p.target},
          {"proposer_members", ids(p.proposer_members)},
          {"proposer_center", vec(p.proposer_center)},
          {"members", ids(p.members)}};
}

struct PayloadJson {
  Json operator()(const ObservationShare& p) const {
    Json seen = Json::array();
    for (const auto& a : p.seen) seen.push_back(to_json(a));
    return {{"seen", seen}};
  }
  Json operator()(const CircleProposal& p) const {
    return {{"circle_id", p.circle_id}, {"members", ids(p.members)}};
  }
  Json operator()(const CircleApproval& p) const { return {{"circle_id", p.circle_id}}; }
  Json operator()(const CircleEstablishment& p) const {
    Json t = Json::array();
    for (const auto& s : p.targets) t.push_back({{"id", s.id}, {"pos", vec(s.pos)}});
    return {{"circle_id", p.circle_id}, {"members", ids(p.members)}, {"center", vec(p.center)},
            {"targets", t}};
  }
  Json operator()(const ConvergenceState& p) const {
    return {{"circle_id", p.circle_id}, {"converged", ids(p.converged)}};
  }
  Json operator()(const CirclePublication& p) const { return circle_json(p); }
  Json operator()(const ExteriorInfo& p) const {
    Json c = Json::array(), q = Json::array();
    for (const auto& x : p.circles) c.push_back(circle_json(x));
    for (const auto& x : p.proposals) q.push_back(proposal_json(x));
    return {{"circles", c}, {"proposals", q}};
  }
  Json operator()(const MergeProposal& p) const { return proposal_json(p); }
  Json operator()(const MergeApproval& p) const {
    return {{"merge_id", p.merge_id}, {"first", p.first}, {"second", p.second},
            {"members", ids(p.members)}, {"center", vec(p.center)}};
  }
  Json operator()(const RandomDirection& p) const {
    return {{"circle_id", p.circle_id}, {"angle", p.angle}, {"center", vec(p.center)}};
  }
};

}  // namespace

Json to_json(const Payload& p) { return std::visit(PayloadJson{}, p); }

Json to_json(const Message& m) {
  return {{"sender", m.sender},
          {"recipients", ids(m.recipients)},
          {"kind", kind_name(m.payload)},
          {"payload", to_json(m.payload)}};
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("experiment config must be an object");
  ExperimentConfig c;
  c.agents_per_side = get<std::vector<int>>(j, "agents_per_side");
  if (j.contains("games_per_point")) c.games_per_point = get<int>(j, "games_per_point");
  if (j.contains("base_seed")) c.base_seed = get<std::uint64_t>(j, "base_seed");
  if (j.contains("strategy_healthy")) c.strategy_healthy = get<std::string>(j, "strategy_healthy");
  if (j.contains("strategy_contaminated")) {
    c.strategy_contaminated = get<std::string>(j, "strategy_contaminated");
  }
  c.world = world_config_from_json(j.value("world", Json()));
  if (j.contains("output")) c.output = get<std::string>(j, "output");
  if (j.contains("aggregate_output")) c.aggregate_output = get<std::string>(j, "aggregate_output");
  if (j.contains("jobs")) c.jobs = get<int>(j, "jobs");
  c.validate();
  return c;
}

Json trajectory_record(const World& world) {
  const auto counts = world.counts();
  Json agents = Json::array();
  for (const auto& a : world.snapshots()) {
    auto rec = to_json(a);
    rec["formation"] = to_string(world.formation_of(a.id));
    agents.push_back(std::move(rec));
  }
  return {{"step", world.step_count()},
          {"healthy", counts.healthy},
          {"contaminated", counts.contaminated},
          {"messages", world.messages_last_step()},
          {"agents", agents}};
}

}  // namespace contam
