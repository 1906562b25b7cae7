#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "contam/engine.hpp"

namespace contam {

/// Maximum clique of a small undirected graph given as adjacency sets over
/// node ids. Ties resolve to the lexicographically smallest sorted id set.
/// When `must_contain` is set only cliques containing it are considered.
std::vector<AgentId> max_clique(const std::map<AgentId, std::set<AgentId>>& adjacency,
                                std::optional<AgentId> must_contain = std::nullopt);

/// Equally spaced slots on a circle of radius `radius`, members sorted by id,
/// first slot at angle 0.
std::vector<SlotTarget> circle_slots(std::span<const AgentId> members, Vec2 center, double radius);

enum class CircleMode : std::uint8_t { Publicize, Discovery, Coordinate, Move };
std::string_view to_string(CircleMode m);
/// All circles share the global mode cycle.
CircleMode circle_mode(int step);

struct KnownCircle {
  CircleId id = 0;
  std::vector<AgentId> members;
  Vec2 center;
  int seen_step = 0;
};

struct MergeChoice {
  enum class Kind : std::uint8_t { Idle, Propose, Approve } kind = Kind::Idle;
  std::optional<KnownCircle> partner;        // circle F for Propose
  std::optional<MergeProposal> accepted;     // proposal P for Approve
};

/// Coordinate-mode rule. F is the largest neighbour circle whose combined size
/// with ours stays within `threshold` (lowest id on ties); P is the largest
/// proposal addressed to us (lowest proposer on ties). P is approved when it
/// came from F, when there is no F, or when |P| exceeds |own| + |F|.
MergeChoice decide_merge(std::size_t own_size, CircleId own_id,
                         std::span<const KnownCircle> neighbours,
                         std::span<const MergeProposal> proposals, int threshold);

/// Single -> Converging -> Circle formation protocol. `threshold` caps the
/// size of merged circles.
class FormationStrategy : public Strategy {
 public:
  FormationStrategy(std::string_view name, int threshold) : name_(name), threshold_(threshold) {}
  std::string_view name() const override { return name_; }
  int threshold() const { return threshold_; }
  std::unique_ptr<AgentMind> make_mind(AgentId id, const WorldConfig& cfg) const override;

 private:
  std::string_view name_;
  int threshold_;
};

/// Unit attraction to visible same-state agents in (s_min, s_max], unit
/// repulsion at or below s_min, scaled to v_max. Silent.
class PotentialStrategy : public Strategy {
 public:
  std::string_view name() const override { return "potential"; }
  std::unique_ptr<AgentMind> make_mind(AgentId id, const WorldConfig& cfg) const override;
};

/// Pure potential step, exposed for tests.
Vec2 potential_movement(const Observation& obs);

class RandomWalkStrategy : public Strategy {
 public:
  std::string_view name() const override { return "random"; }
  std::unique_ptr<AgentMind> make_mind(AgentId id, const WorldConfig& cfg) const override;
};

/// A movement of length v_max in a uniformly drawn direction.
Vec2 random_step(Rng& rng, double v_max);

/// "circle", "clique", "potential" or "random". Throws ConfigError otherwise.
std::unique_ptr<Strategy> make_strategy(std::string_view name, const WorldConfig& cfg);

inline constexpr std::string_view kStrategyNames[] = {"circle", "clique", "potential", "random"};

}  // namespace contam
