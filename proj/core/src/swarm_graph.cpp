#include "contam/swarm_graph.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

#include "contam/errors.hpp"
#include "spatial_grid.hpp"

namespace contam {

std::string_view to_string(Health h) {
  return h == Health::Healthy ? "healthy" : "contaminated";
}

Health parse_health(std::string_view s) {
  if (s == "healthy" || s == "H") return Health::Healthy;
  if (s == "contaminated" || s == "C") return Health::Contaminated;
  throw ValidationError("unknown health state '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// ObservationGraph

ObservationGraph::ObservationGraph(std::vector<AgentId> ids,
                                   std::vector<std::vector<std::size_t>> adjacency)
    : ids_(std::move(ids)), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != ids_.size()) {
    throw ValidationError("adjacency size does not match node count");
  }
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw ValidationError("duplicate agent id " + std::to_string(ids_[i]));
    }
    std::sort(adjacency_[i].begin(), adjacency_[i].end());
  }
}

std::size_t ObservationGraph::index_of(AgentId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw LookupError("agent " + std::to_string(id) + " not in graph");
  return it->second;
}

std::vector<AgentId> ObservationGraph::observed_set(AgentId id) const {
  const auto idx = index_of(id);
  std::vector<AgentId> out{id};
  for (auto n : adjacency_[idx]) out.push_back(ids_[n]);
  std::sort(out.begin(), out.end());
  return out;
}

bool ObservationGraph::observes(AgentId a, AgentId b) const {
  if (a == b) return index_.count(a) != 0;
  const auto& adj = adjacency_[index_of(a)];
  return std::binary_search(adj.begin(), adj.end(), index_of(b));
}

std::vector<IdPair> ObservationGraph::edges() const {
  std::vector<IdPair> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (auto j : adjacency_[i]) {
      if (i < j) out.emplace_back(std::min(ids_[i], ids_[j]), std::max(ids_[i], ids_[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ObservationGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adjacency_) total += a.size();
  return total / 2;
}

ObservationGraph build_observation_graph(std::span<const AgentSnapshot> agents,
                                         const WorldConfig& cfg) {
  const std::size_t n = agents.size();
  std::vector<Vec2> pos(n);
  std::vector<AgentId> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!agents[i].pos.finite()) {
      throw ValidationError("agent " + std::to_string(agents[i].id) + " has a non-finite position");
    }
    pos[i] = agents[i].pos;
    ids[i] = agents[i].id;
  }

  const double r = cfg.body_radius();
  const double reach = cfg.s_max + cfg.eps + r;
  detail::SpatialGrid grid(pos, reach);
  std::vector<std::vector<std::size_t>> near(n);
  for (std::size_t i = 0; i < n; ++i) {
    near[i] = grid.within(pos[i], reach);
    for (auto j : near[i]) {
      if (j != i && distance(pos[i], pos[j]) <= cfg.d_r) {
        throw GeometryError("agents " + std::to_string(ids[i]) + " and " + std::to_string(ids[j]) +
                            " overlap");
      }
    }
  }

  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : near[i]) {
      if (j <= i || !in_sensing_band(distance(pos[i], pos[j]), cfg)) continue;
      // Any body touching segment i-j lies within |ij| + r of i, so near[i] suffices.
      const bool blocked = std::any_of(near[i].begin(), near[i].end(), [&](std::size_t k) {
        return k != i && k != j && segment_intersects_disk(pos[i], pos[j], pos[k], r);
      });
      if (!blocked) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  return ObservationGraph(std::move(ids), std::move(adjacency));
}

// ---------------------------------------------------------------------------
// ComponentView

ComponentView::ComponentView(Health state, std::vector<AgentId> members,
                             std::span<const IdPair> edges)
    : state_(state), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ValidationError("duplicate component member");
  }
  adjacency_.resize(members_.size());
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    const auto ia = index_of(a);
    const auto ib = index_of(b);
    adjacency_[ia].push_back(ib);
    adjacency_[ib].push_back(ia);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  fence_.assign(members_.size(), true);
}

bool ComponentView::contains(AgentId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

std::size_t ComponentView::index_of(AgentId id) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), id);
  if (it == members_.end() || *it != id) {
    throw LookupError("agent " + std::to_string(id) + " is not a component member");
  }
  return static_cast<std::size_t>(it - members_.begin());
}

bool ComponentView::observes(AgentId a, AgentId b) const {
  if (a == b) return contains(a);
  const auto& adj = adjacency_[index_of(a)];
  return std::binary_search(adj.begin(), adj.end(), index_of(b));
}

std::vector<IdPair> ComponentView::edges() const {
  std::vector<IdPair> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (auto j : adjacency_[i]) {
      if (i < j) out.emplace_back(members_[i], members_[j]);
    }
  }
  return out;
}

int ComponentView::connectivity_factor(AgentId agent) const {
  return static_cast<int>(adjacency_[index_of(agent)].size());
}

std::vector<AgentId> ComponentView::fence() const {
  std::vector<AgentId> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (fence_[i]) out.push_back(members_[i]);
  }
  return out;
}

void ComponentView::set_fence(std::span<const AgentId> bare) {
  std::vector<bool> next(members_.size(), false);
  for (auto id : bare) next[index_of(id)] = true;
  fence_ = std::move(next);
}

bool ComponentView::is_connected() const {
  if (members_.empty()) return false;
  std::vector<bool> seen(members_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == members_.size();
}

int connectivity_factor(AgentId agent, const ComponentView& comp) {
  return comp.connectivity_factor(agent);
}

// ---------------------------------------------------------------------------
// Components

std::size_t ComponentGraph::component_of(AgentId id) const {
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].contains(id)) return c;
  }
  throw LookupError("agent " + std::to_string(id) + " belongs to no component");
}

ComponentGraph connected_components(const ObservationGraph& graph,
                                    const std::unordered_map<AgentId, Health>& states) {
  const std::size_t n = graph.size();
  std::vector<Health> state(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = states.find(graph.id_at(i));
    if (it == states.end()) {
      throw LookupError("no state for agent " + std::to_string(graph.id_at(i)));
    }
    state[i] = it->second;
  }

  // Visit nodes in id order so component numbering follows smallest member id.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return graph.id_at(a) < graph.id_at(b); });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp_of(n, kUnset);
  std::vector<std::vector<std::size_t>> groups;
  for (auto start : order) {
    if (comp_of[start] != kUnset) continue;
    const auto c = groups.size();
    groups.emplace_back();
    std::vector<std::size_t> stack{start};
    comp_of[start] = c;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      groups[c].push_back(v);
      for (auto w : graph.neighbors(v)) {
        if (comp_of[w] == kUnset && state[w] == state[v]) {
          comp_of[w] = c;
          stack.push_back(w);
        }
      }
    }
  }

  ComponentGraph out;
  out.components.reserve(groups.size());
  for (const auto& g : groups) {
    std::vector<AgentId> members;
    std::vector<IdPair> edges;
    for (auto v : g) {
      members.push_back(graph.id_at(v));
      for (auto w : graph.neighbors(v)) {
        if (comp_of[w] == comp_of[v] && graph.id_at(v) < graph.id_at(w)) {
          edges.emplace_back(graph.id_at(v), graph.id_at(w));
        }
      }
    }
    out.components.emplace_back(state[g.front()], std::move(members), edges);
  }

  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : graph.neighbors(v)) {
      if (state[v] != state[w]) {
        out.adjacency.emplace_back(std::min(comp_of[v], comp_of[w]), std::max(comp_of[v], comp_of[w]));
      }
    }
  }
  std::sort(out.adjacency.begin(), out.adjacency.end());
  out.adjacency.erase(std::unique(out.adjacency.begin(), out.adjacency.end()), out.adjacency.end());
  return out;
}

ComponentGraph connected_components(const ObservationGraph& graph,
                                    std::span<const AgentSnapshot> agents) {
  std::unordered_map<AgentId, Health> states;
  for (const auto& a : agents) states[a.id] = a.state;
  return connected_components(graph, states);
}

// ---------------------------------------------------------------------------
// Fence

FenceOracle::FenceOracle(const ComponentView& comp, std::span<const AgentSnapshot> world,
                         const WorldConfig& cfg)
    : members_(comp.members().begin(), comp.members().end()) {
  const std::size_t n = members_.size();
  std::vector<Vec2> world_pos(world.size());
  std::unordered_map<AgentId, std::size_t> world_index;
  for (std::size_t i = 0; i < world.size(); ++i) {
    world_pos[i] = world[i].pos;
    world_index[world[i].id] = i;
  }
  std::vector<std::size_t> member_world(n);
  for (std::size_t m = 0; m < n; ++m) {
    auto it = world_index.find(members_[m]);
    if (it == world_index.end()) {
      throw LookupError("component member " + std::to_string(members_[m]) + " missing from world");
    }
    member_world[m] = it->second;
  }

  const double r = cfg.body_radius();
  const double ring = cfg.s_max * (1.0 - cfg.eps);
  const double reach = cfg.s_max + cfg.eps + r;
  detail::SpatialGrid world_grid(world_pos, reach);

  std::vector<Vec2> member_pos(n);
  for (std::size_t m = 0; m < n; ++m) member_pos[m] = world_pos[member_world[m]];
  detail::SpatialGrid member_grid(member_pos, reach);

  // World bodies that may touch a segment of length <= s_max from each member.
  std::vector<std::vector<std::size_t>> member_blockers(n);
  for (std::size_t m = 0; m < n; ++m) member_blockers[m] = world_grid.within(member_pos[m], reach);

  auto clear_path = [&](std::size_t from_member, Vec2 to) {
    const auto self = member_world[from_member];
    const Vec2 origin = member_pos[from_member];
    for (auto k : member_blockers[from_member]) {
      if (k != self && segment_intersects_disk(origin, to, world_pos[k], r)) return false;
    }
    return true;
  };

  const int samples = cfg.fence_samples;
  coverers_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto candidates = member_grid.within(member_pos[i], 2.0 * reach);
    for (int s = 0; s < samples; ++s) {
      const double a = 2.0 * std::numbers::pi * s / samples;
      const Vec2 p = member_pos[i] + Vec2{std::cos(a), std::sin(a)} * ring;
      if (!clear_path(i, p)) continue;
      std::vector<std::uint32_t> cover;
      for (auto j : candidates) {
        if (j == i || !in_sensing_band(distance(member_pos[j], p), cfg)) continue;
        if (clear_path(j, p)) cover.push_back(static_cast<std::uint32_t>(j));
      }
      coverers_[i].push_back(std::move(cover));
    }
  }
}

std::vector<bool> FenceOracle::bare_mask(const std::vector<bool>& remaining) const {
  const std::size_t n = members_.size();
  std::vector<bool> bare(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!remaining[i]) continue;
    for (const auto& cover : coverers_[i]) {
      const bool covered = std::any_of(cover.begin(), cover.end(),
                                       [&](std::uint32_t j) { return j != i && remaining[j]; });
      if (!covered) {
        bare[i] = true;
        break;
      }
    }
  }
  return bare;
}

std::vector<AgentId> FenceOracle::fence(const std::vector<bool>& remaining) const {
  const auto bare = bare_mask(remaining);
  std::vector<AgentId> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (bare[i]) out.push_back(members_[i]);
  }
  return out;
}

std::vector<AgentId> FenceOracle::fence() const {
  return fence(std::vector<bool>(members_.size(), true));
}

std::vector<AgentId> fence(const ComponentView& comp, std::span<const AgentSnapshot> world,
                           const WorldConfig& cfg) {
  return FenceOracle(comp, world, cfg).fence();
}

}  // namespace contam
