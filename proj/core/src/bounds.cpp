#include "contam/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "contam/errors.hpp"
#include "contam/swarm_graph.hpp"
#include "contam/wpc.hpp"

namespace contam {

int max_connectivity_factor(const WorldConfig& cfg) {
  return dense_circle_capacity(cfg.s_max, cfg.d_r);
}

int weak_point_bound(const WorldConfig& cfg) {
  return guarded_floor(std::numbers::pi / dense_arc_angle(cfg.s_max, cfg.d_r));
}

ConcealedSector concealed_sector(double radius, const WorldConfig& cfg) {
  if (!(radius > cfg.d_r)) throw DomainError("concealed sector needs radius > d_r");
  ConcealedSector out;
  out.beta = 2.0 * std::acos(1.0 - cfg.d_r / radius);
  out.count = guarded_floor(out.beta / dense_arc_angle(radius, cfg.d_r));
  return out;
}

DenseCircleSpec odc(const WorldConfig& cfg) {
  DenseCircleSpec spec;
  spec.radius = cfg.s_max / 2.0;
  spec.count = dense_circle_capacity(spec.radius, cfg.d_r);
  spec.positions = dense_circle_positions(spec.count, spec.radius, {0.0, 0.0}, cfg.d_r);
  return spec;
}

int dense_circle_wpc(double radius, int count, const WorldConfig& cfg) {
  if (count < 1) throw CapacityError("dense circle needs at least one agent");
  const auto pos = dense_circle_positions(count, radius, {0.0, 0.0}, cfg.d_r);
  std::vector<AgentSnapshot> world;
  world.reserve(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    world.push_back({static_cast<AgentId>(i + 1), pos[i], Health::Healthy});
  }
  const auto graph = build_observation_graph(world, cfg);
  const auto comps = connected_components(graph, world);
  int best = 0;
  for (const auto& comp : comps.components) {
    const FenceOracle oracle(comp, world, cfg);
    best = std::max(best, wpc(comp, oracle));
  }
  return best;
}

}  // namespace contam
