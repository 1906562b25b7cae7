#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "contam/geometry.hpp"

namespace contam {

enum class Health : std::uint8_t { Healthy, Contaminated };

constexpr Health opposite(Health h) {
  return h == Health::Healthy ? Health::Contaminated : Health::Healthy;
}
std::string_view to_string(Health h);
/// Parses "healthy" / "contaminated"; throws ValidationError otherwise.
Health parse_health(std::string_view s);

using AgentId = std::int32_t;
using IdPair = std::pair<AgentId, AgentId>;

struct AgentSnapshot {
  AgentId id = 0;
  Vec2 pos;
  Health state = Health::Healthy;
};

/// Undirected observation graph. Node order follows the input snapshot order;
/// neighbor lists exclude the node itself but observed_set() includes it.
class ObservationGraph {
 public:
  ObservationGraph() = default;
  ObservationGraph(std::vector<AgentId> ids, std::vector<std::vector<std::size_t>> adjacency);

  std::size_t size() const { return ids_.size(); }
  std::span<const AgentId> ids() const { return ids_; }
  AgentId id_at(std::size_t idx) const { return ids_[idx]; }
  std::size_t index_of(AgentId id) const;
  std::span<const std::size_t> neighbors(std::size_t idx) const { return adjacency_[idx]; }

  /// Ids observed by `id`, itself included, ascending.
  std::vector<AgentId> observed_set(AgentId id) const;
  bool observes(AgentId a, AgentId b) const;
  /// Every edge once, as (smaller id, larger id), sorted.
  std::vector<IdPair> edges() const;
  std::size_t edge_count() const;

 private:
  std::vector<AgentId> ids_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<AgentId, std::size_t> index_;
};

/// Edge iff the two centers are within the sensing band and no third body
/// touches the center-to-center segment. Throws GeometryError when two bodies
/// are d_r or closer, ValidationError on duplicate ids or non-finite positions.
ObservationGraph build_observation_graph(std::span<const AgentSnapshot> agents,
                                         const WorldConfig& cfg);

/// A same-state connected component. Members are kept ascending; internal
/// indices refer to that order. The fence defaults to "every member bare"
/// until set from a geometric computation or an explicit list.
class ComponentView {
 public:
  ComponentView(Health state, std::vector<AgentId> members, std::span<const IdPair> edges);

  Health state() const { return state_; }
  std::span<const AgentId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  AgentId id_at(std::size_t idx) const { return members_[idx]; }
  bool contains(AgentId id) const;
  /// Throws LookupError when `id` is not a member.
  std::size_t index_of(AgentId id) const;
  std::span<const std::size_t> neighbors(std::size_t idx) const { return adjacency_[idx]; }
  bool observes(AgentId a, AgentId b) const;
  std::vector<IdPair> edges() const;

  /// Same-state members observed by `agent`, excluding itself.
  int connectivity_factor(AgentId agent) const;

  std::vector<AgentId> fence() const;
  bool is_bare(std::size_t idx) const { return fence_[idx]; }
  /// Replaces the fence; every id must be a member.
  void set_fence(std::span<const AgentId> bare);

  bool is_connected() const;

 private:
  Health state_;
  std::vector<AgentId> members_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> fence_;
};

struct ComponentGraph {
  std::vector<ComponentView> components;  // ordered by smallest member id
  /// Pairs of component indices (lower first) with opposing states and at
  /// least one cross observation edge.
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;

  std::size_t component_of(AgentId id) const;
};

ComponentGraph connected_components(const ObservationGraph& graph,
                                    const std::unordered_map<AgentId, Health>& states);
ComponentGraph connected_components(const ObservationGraph& graph,
                                    std::span<const AgentSnapshot> agents);

int connectivity_factor(AgentId agent, const ComponentView& comp);

/// Sampled bareness test. Each member gets `fence_samples` points on the
/// circle of radius s_max*(1-eps) around it; a member is bare when one of
/// those points is visible to it and lies outside the observation area of
/// every other remaining member. All bodies in the world occlude, including
/// opposing-state agents and members that are no longer "remaining".
///
/// The sample-to-coverer table is built once, so re-evaluating the fence of
/// any remaining subset is cheap.
class FenceOracle {
 public:
  FenceOracle(const ComponentView& comp, std::span<const AgentSnapshot> world,
              const WorldConfig& cfg);

  /// Bare verdict per member index, restricted to `remaining` (mask over member indices).
  std::vector<bool> bare_mask(const std::vector<bool>& remaining) const;
  std::vector<AgentId> fence(const std::vector<bool>& remaining) const;
  std::vector<AgentId> fence() const;

 private:
  std::vector<AgentId> members_;
  // per member: for each sample visible from it, the member indices covering it
  std::vector<std::vector<std::vector<std::uint32_t>>> coverers_;
};

std::vector<AgentId> fence(const ComponentView& comp, std::span<const AgentSnapshot> world,
                           const WorldConfig& cfg);

}  // namespace contam
