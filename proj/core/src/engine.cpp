#include "contam/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "contam/errors.hpp"
#include "spatial_grid.hpp"

namespace contam {

std::string_view to_string(Formation f) {
  switch (f) {
    case Formation::Single: return "single";
    case Formation::Converging: return "converging";
    case Formation::Circle: return "circle";
  }
  return "?";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::AllHealthy: return "all_healthy";
    case Termination::AllContaminated: return "all_contaminated";
    case Termination::TimeBound: return "time_bound";
    case Termination::Stagnation: return "stagnation";
  }
  return "?";
}

std::string_view kind_name(const Payload& p) {
  static constexpr std::string_view names[] = {
      "observation_share", "circle_proposal",    "circle_approval", "circle_establishment",
      "convergence_state", "circle_publication", "exterior_info",   "merge_proposal",
      "merge_approval",    "random_direction"};
  return names[p.index()];
}

const AgentSnapshot* Observation::find(AgentId id) const {
  for (const auto& a : visible) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::vector<Health> majority_update(std::span<const AgentSnapshot> agents,
                                    const ObservationGraph& graph) {
  std::vector<Health> out(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    int h = agents[i].state == Health::Healthy ? 1 : 0;
    int c = 1 - h;
    for (auto j : graph.neighbors(i)) {
      (agents[j].state == Health::Healthy ? h : c) += 1;
    }
    out[i] = c > h ? Health::Contaminated : Health::Healthy;
  }
  return out;
}

World::World(const WorldConfig& cfg, std::vector<AgentSnapshot> agents, const Strategy& healthy,
             const Strategy& contaminated, std::uint64_t seed)
    : World(cfg, std::move(agents), healthy, contaminated, Rng(seed)) {}

World::World(const WorldConfig& cfg, std::vector<AgentSnapshot> agents, const Strategy& healthy,
             const Strategy& contaminated, Rng rng)
    : cfg_(cfg), rng_(rng) {
  cfg_.validate();
  agents_.reserve(agents.size());
  for (auto& a : agents) {
    if (a.pos.x < 0 || a.pos.y < 0 || a.pos.x > cfg_.arena_width || a.pos.y > cfg_.arena_height) {
      throw ValidationError("agent " + std::to_string(a.id) + " starts outside the arena");
    }
    const Strategy& s = a.state == Health::Healthy ? healthy : contaminated;
    AgentState st;
    st.snapshot = a;
    st.mind = s.make_mind(a.id, cfg_);
    agents_.push_back(std::move(st));
  }
  // Validates ids and spacing up front.
  build_observation_graph(snapshots(), cfg_);
}

std::vector<AgentSnapshot> World::snapshots() const {
  std::vector<AgentSnapshot> out;
  out.reserve(agents_.size());
  for (const auto& a : agents_) out.push_back(a.snapshot);
  return out;
}

StepCounts World::counts() const {
  StepCounts c;
  for (const auto& a : agents_) (a.snapshot.state == Health::Healthy ? c.healthy : c.contaminated)++;
  return c;
}

std::size_t World::index_of(AgentId id) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i].snapshot.id == id) return i;
  }
  throw LookupError("unknown agent " + std::to_string(id));
}

Formation World::formation_of(AgentId id) const { return agents_[index_of(id)].mind->formation(); }

MindView World::view_of(AgentId id) const { return agents_[index_of(id)].mind->view(); }

void World::inject(AgentId to, Message m) { agents_[index_of(to)].mailbox.push_back(std::move(m)); }

void World::set_fixed_schedule(std::vector<AgentId> order) {
  std::vector<AgentId> sorted = order, ids;
  for (const auto& a : agents_) ids.push_back(a.snapshot.id);
  std::sort(sorted.begin(), sorted.end());
  std::sort(ids.begin(), ids.end());
  if (sorted != ids) throw ValidationError("fixed schedule must list every agent exactly once");
  fixed_schedule_ = std::move(order);
}

void World::step() {
  const int now = step_ + 1;
  auto snaps = snapshots();
  const auto graph = build_observation_graph(snaps, cfg_);

  const auto states = majority_update(snaps, graph);
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (states[i] != snaps[i].state) {
      agents_[i].snapshot.state = states[i];
      snaps[i].state = states[i];
      agents_[i].mind->on_health_change(states[i]);
    }
  }

  std::vector<std::size_t> order(agents_.size());
  if (fixed_schedule_) {
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = index_of((*fixed_schedule_)[k]);
  } else {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng_);
  }

  std::vector<Vec2> movement(agents_.size());
  messages_last_step_ = 0;
  for (auto i : order) {
    auto& agent = agents_[i];
    Observation obs;
    obs.step = now;
    obs.self = agent.snapshot.id;
    obs.pos = agent.snapshot.pos;
    obs.state = agent.snapshot.state;
    obs.cfg = &cfg_;
    for (auto j : graph.neighbors(i)) obs.visible.push_back(snaps[j]);

    std::vector<Message> inbox;
    inbox.swap(agent.mailbox);
    Decision d;
    try {
      d = agent.mind->act(obs, inbox, rng_);
    } catch (const std::exception& e) {
      throw SimulationError(std::string("strategy failed: ") + e.what(), now, obs.self);
    }
    if (!d.movement.finite()) {
      throw SimulationError("strategy returned a non-finite movement", now, obs.self);
    }
    movement[i] = d.movement;
    for (auto& m : d.outgoing) {
      m.sender = obs.self;
      for (auto r : m.recipients) {
        if (r == obs.self || obs.find(r) == nullptr) {
          throw SimulationError("message recipient " + std::to_string(r) + " is not observed",
                                now, obs.self);
        }
      }
      for (auto r : m.recipients) {
        for (auto j : graph.neighbors(i)) {
          if (agents_[j].snapshot.id == r) {
            agents_[j].mailbox.push_back(m);
            break;
          }
        }
      }
      ++messages_last_step_;
      if (log_messages_) message_log_.push_back({now, std::move(m)});
    }
  }

  // Apply all movements at once; a move that would touch another body is undone.
  std::vector<Vec2> old_pos(agents_.size()), new_pos(agents_.size());
  std::vector<bool> moved(agents_.size(), false);
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    old_pos[i] = agents_[i].snapshot.pos;
    Vec2 v = movement[i];
    const double len = v.norm();
    if (len > cfg_.v_max) v = v * (cfg_.v_max / len);
    Vec2 p = old_pos[i] + v;
    p.x = std::clamp(p.x, 0.0, cfg_.arena_width);
    p.y = std::clamp(p.y, 0.0, cfg_.arena_height);
    new_pos[i] = p;
    moved[i] = !(p == old_pos[i]);
  }
  const double min_gap = cfg_.d_r * (1.0 + 1e-6);
  for (bool changed = true; changed;) {
    changed = false;
    const detail::SpatialGrid grid(new_pos, min_gap);
    for (std::size_t i = 0; i < agents_.size(); ++i) {
      if (!moved[i]) continue;
      for (auto j : grid.within(new_pos[i], min_gap)) {
        if (j == i) continue;
        new_pos[i] = old_pos[i];
        moved[i] = false;
        changed = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) agents_[i].snapshot.pos = new_pos[i];
  step_ = now;
}

std::vector<AgentSnapshot> random_placement(int n_healthy, int n_contaminated,
                                            const WorldConfig& cfg, Rng& rng) {
  if (n_healthy < 0 || n_contaminated < 0) throw PlacementError("negative agent count");
  const int total = n_healthy + n_contaminated;
  const double spacing = 2.0 * cfg.d_r;
  std::uniform_real_distribution<double> ux(0.0, cfg.arena_width), uy(0.0, cfg.arena_height);
  std::vector<AgentSnapshot> out;
  std::vector<Vec2> placed;
  const int max_attempts = 1000 * std::max(total, 1);
  int attempts = 0;
  while (static_cast<int>(out.size()) < total) {
    if (++attempts > max_attempts) {
      throw PlacementError("could not place " + std::to_string(total) + " agents with spacing " +
                           std::to_string(spacing));
    }
    const double x = ux(rng);
    const double y = uy(rng);
    const Vec2 p{x, y};
    const bool clear = std::none_of(placed.begin(), placed.end(),
                                    [&](Vec2 q) { return distance(p, q) < spacing; });
    if (!clear) continue;
    const auto id = static_cast<AgentId>(out.size() + 1);
    const Health h = static_cast<int>(out.size()) < n_healthy ? Health::Healthy
                                                               : Health::Contaminated;
    out.push_back({id, p, h});
    placed.push_back(p);
  }
  return out;
}

GameResult run_game(const WorldConfig& cfg, const Strategy& healthy, const Strategy& contaminated,
                    const InitialState& init, std::uint64_t seed, const StepObserver& observer) {
  cfg.validate();
  Rng rng(seed);
  auto agents = init.agents.empty()
                    ? random_placement(init.n_healthy, init.n_contaminated, cfg, rng)
                    : init.agents;
  if (agents.empty()) throw ValidationError("a game needs at least one agent");
  World world(cfg, std::move(agents), healthy, contaminated, rng);

  GameResult result;
  const auto total = static_cast<double>(world.counts().healthy + world.counts().contaminated);
  while (true) {
    world.step();
    const auto c = world.counts();
    result.history.push_back(c);
    if (observer) observer(world);
    const auto n = static_cast<int>(result.history.size());
    if (c.contaminated == 0) {
      result.termination = Termination::AllHealthy;
      break;
    }
    if (c.healthy == 0) {
      result.termination = Termination::AllContaminated;
      break;
    }
    if (n >= cfg.stagnation_window &&
        std::all_of(result.history.end() - cfg.stagnation_window, result.history.end(),
                    [&](const StepCounts& s) { return s == c; })) {
      result.termination = Termination::Stagnation;
      break;
    }
    if (n >= cfg.t_max) {
      result.termination = Termination::TimeBound;
      break;
    }
  }
  result.steps = world.step_count();
  result.final_healthy_pct = 100.0 * result.final_counts().healthy / total;
  return result;
}

}  // namespace contam
