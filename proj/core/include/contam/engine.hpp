#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "contam/geometry.hpp"
#include "contam/messages.hpp"
#include "contam/swarm_graph.hpp"

namespace contam {

using Rng = std::mt19937_64;

enum class Formation : std::uint8_t { Single, Converging, Circle };
std::string_view to_string(Formation f);

/// What one agent perceives during its turn. `visible` excludes the agent itself.
struct Observation {
  int step = 0;  // 1-based step being executed
  AgentId self = 0;
  Vec2 pos;
  Health state = Health::Healthy;
  std::vector<AgentSnapshot> visible;
  const WorldConfig* cfg = nullptr;

  const AgentSnapshot* find(AgentId id) const;
};

/// Read-only summary of an agent's protocol memory.
struct MindView {
  Formation formation = Formation::Single;
  CircleId circle_id = 0;
  std::vector<AgentId> members;
  std::optional<Vec2> target;
  std::vector<CircleId> known_circles;
};

struct Decision {
  Vec2 movement;  // clamped by the engine
  std::vector<Message> outgoing;
};

/// Per-agent controller holding that agent's private memory.
class AgentMind {
 public:
  virtual ~AgentMind() = default;
  virtual Decision act(const Observation& obs, std::span<const Message> inbox, Rng& rng) = 0;
  /// Called when the majority rule flips this agent's state.
  virtual void on_health_change(Health) {}
  virtual Formation formation() const { return Formation::Single; }
  virtual MindView view() const { return {formation(), 0, {}, std::nullopt, {}}; }
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string_view name() const = 0;
  virtual std::unique_ptr<AgentMind> make_mind(AgentId id, const WorldConfig& cfg) const = 0;
};

enum class Termination : std::uint8_t { AllHealthy, AllContaminated, TimeBound, Stagnation };
std::string_view to_string(Termination t);

struct StepCounts {
  int healthy = 0;
  int contaminated = 0;
  bool operator==(const StepCounts&) const = default;
};

struct GameResult {
  Termination termination = Termination::TimeBound;
  int steps = 0;
  std::vector<StepCounts> history;
  double final_healthy_pct = 0.0;

  StepCounts final_counts() const { return history.empty() ? StepCounts{} : history.back(); }
};

struct LoggedMessage {
  int step = 0;
  Message message;
};

struct AgentState {
  AgentSnapshot snapshot;
  std::unique_ptr<AgentMind> mind;
  std::vector<Message> mailbox;
};

/// Majority rule over each agent's observed set (self included); ties stay healthy.
std::vector<Health> majority_update(std::span<const AgentSnapshot> agents,
                                    const ObservationGraph& graph);

class World {
 public:
  World(const WorldConfig& cfg, std::vector<AgentSnapshot> agents, const Strategy& healthy,
        const Strategy& contaminated, std::uint64_t seed);
  World(const WorldConfig& cfg, std::vector<AgentSnapshot> agents, const Strategy& healthy,
        const Strategy& contaminated, Rng rng);

  /// One synchronous step: state update, scheduled Look-Compute-Move, movement.
  void step();

  int step_count() const { return step_; }
  const WorldConfig& config() const { return cfg_; }
  std::vector<AgentSnapshot> snapshots() const;
  StepCounts counts() const;
  Formation formation_of(AgentId id) const;
  MindView view_of(AgentId id) const;
  /// Queues a message in `to`'s mailbox as if sent during the previous step.
  void inject(AgentId to, Message m);
  std::size_t messages_last_step() const { return messages_last_step_; }

  /// Replaces the random schedule with a fixed agent order (tests).
  void set_fixed_schedule(std::vector<AgentId> order);
  void enable_message_log(bool on) { log_messages_ = on; }
  const std::vector<LoggedMessage>& message_log() const { return message_log_; }

 private:
  std::size_t index_of(AgentId id) const;

  WorldConfig cfg_;
  std::vector<AgentState> agents_;
  Rng rng_;
  int step_ = 0;
  std::optional<std::vector<AgentId>> fixed_schedule_;
  bool log_messages_ = false;
  std::vector<LoggedMessage> message_log_;
  std::size_t messages_last_step_ = 0;
};

/// Explicit agents, or counts for uniform random placement.
struct InitialState {
  std::vector<AgentSnapshot> agents;
  int n_healthy = 0;
  int n_contaminated = 0;
};

/// Rejection sampling with pairwise spacing >= 2 d_r. Healthy agents get ids
/// 1..n_healthy, contaminated the following ids. Throws PlacementError.
std::vector<AgentSnapshot> random_placement(int n_healthy, int n_contaminated,
                                            const WorldConfig& cfg, Rng& rng);

using StepObserver = std::function<void(const World&)>;

/// Steps until every agent shares one state, the counts stagnate for
/// stagnation_window steps, or t_max is reached. At least one step runs.
GameResult run_game(const WorldConfig& cfg, const Strategy& healthy, const Strategy& contaminated,
                    const InitialState& init, std::uint64_t seed,
                    const StepObserver& observer = {});

}  // namespace contam
