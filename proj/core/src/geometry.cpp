#include "contam/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "contam/errors.hpp"

namespace contam {

void WorldConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("invalid world config: " + msg); };
  if (!(d_r > 0.0)) fail("d_r must be > 0");
  if (!(s_min > d_r)) fail("s_min must exceed d_r");
  if (!(s_max > s_min)) fail("s_max must exceed s_min");
  if (!(arena_width > 0.0) || !(arena_height > 0.0)) fail("arena dimensions must be > 0");
  if (!(v_max > 0.0)) fail("v_max must be > 0");
  if (t_max < 1) fail("t_max must be >= 1");
  if (stagnation_window < 1) fail("stagnation_window must be >= 1");
  if (max_clique_size < 2) fail("max_clique_size must be >= 2");
  if (fence_samples < 8) fail("fence_samples must be >= 8");
  if (!(eps > 0.0)) fail("eps must be > 0");
  if (convergence_patience < 1) fail("convergence_patience must be >= 1");
}

double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

double point_segment_distance(Vec2 p, Vec2 q, Vec2 c) {
  const Vec2 d = q - p;
  const double len2 = d.dot(d);
  if (len2 == 0.0) return distance(p, c);
  const double t = std::clamp((c - p).dot(d) / len2, 0.0, 1.0);
  return distance(p + d * t, c);
}

bool segment_intersects_disk(Vec2 p, Vec2 q, Vec2 center, double radius) {
  return point_segment_distance(p, q, center) <= radius;
}

bool in_sensing_band(double d, const WorldConfig& cfg) {
  return d > cfg.s_min && d <= cfg.s_max + cfg.eps;
}

bool can_observe(Vec2 observer, Vec2 target, std::span<const Vec2> blockers,
                 const WorldConfig& cfg) {
  if (!in_sensing_band(distance(observer, target), cfg)) return false;
  const double r = cfg.body_radius();
  return std::none_of(blockers.begin(), blockers.end(), [&](Vec2 b) {
    return segment_intersects_disk(observer, target, b, r);
  });
}

int guarded_floor(double x) { return static_cast<int>(std::floor(x + 1e-12)); }

double dense_arc_angle(double radius, double d_r) {
  if (!(radius >= d_r) || !(d_r > 0.0)) {
    throw DomainError("dense circle radius must be >= d_r");
  }
  const double c = std::clamp(1.0 - 2.0 * d_r * d_r / (radius * radius), -1.0, 1.0);
  return std::acos(c);
}

int dense_circle_capacity(double radius, double d_r) {
  return guarded_floor(2.0 * std::numbers::pi / dense_arc_angle(radius, d_r));
}

std::vector<Vec2> dense_circle_positions(int n, double radius, Vec2 center, double d_r) {
  const int cap = dense_circle_capacity(radius, d_r);
  if (n < 1 || n > cap) {
    throw CapacityError("dense circle of radius " + std::to_string(radius) + " holds " +
                        std::to_string(cap) + " agents, requested " + std::to_string(n));
  }
  const double alpha = dense_arc_angle(radius, d_r);
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = alpha * k;
    out.push_back(center + Vec2{std::cos(a), std::sin(a)} * radius);
  }
  return out;
}

std::vector<Vec2> uniform_circle_positions(int n, double radius, Vec2 center) {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    out.push_back(center + Vec2{std::cos(a), std::sin(a)} * radius);
  }
  return out;
}

}  // namespace contam
