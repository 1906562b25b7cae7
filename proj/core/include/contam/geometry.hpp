#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace contam {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// World and sensing parameters. Defaults follow the reference experiment:
/// S_min = 2, S_max = 6, body diameter 0.25, T = 1024, 200-step stagnation.
struct WorldConfig {
  double s_min = 2.0;
  double s_max = 6.0;
  double d_r = 0.25;  // body diameter
  double arena_width = 100.0;
  double arena_height = 100.0;
  double v_max = 0.5;
  int t_max = 1024;
  int stagnation_window = 200;
  int max_clique_size = 9;
  int fence_samples = 360;
  double eps = 1e-9;
  // Steps a converging group may take before it gives up and dissolves.
  int convergence_patience = 120;

  /// Throws ConfigError when a field is out of range.
  void validate() const;

  double body_radius() const { return d_r / 2.0; }
};

double distance(Vec2 a, Vec2 b);

/// Distance from `c` to the closed segment p-q.
double point_segment_distance(Vec2 p, Vec2 q, Vec2 c);

/// True iff the closed segment p-q comes within `radius` of `center`.
bool segment_intersects_disk(Vec2 p, Vec2 q, Vec2 center, double radius);

/// Distance band of the observation annulus: open at s_min, closed at s_max + eps.
bool in_sensing_band(double d, const WorldConfig& cfg);

/// Annulus test plus occlusion by every blocker body (disk of radius d_r/2).
/// `blockers` must not contain the observer or the target.
bool can_observe(Vec2 observer, Vec2 target, std::span<const Vec2> blockers,
                 const WorldConfig& cfg);

/// Angle subtended by two centers 2*d_r apart on a circle of `radius`.
double dense_arc_angle(double radius, double d_r);

/// floor(2*pi / arccos(1 - 2 d_r^2 / radius^2)). Throws DomainError if radius < d_r.
int dense_circle_capacity(double radius, double d_r);

/// `n` points packed along the circle starting at angle 0, one dense arc apart.
/// Throws CapacityError if n exceeds dense_circle_capacity(radius, d_r).
std::vector<Vec2> dense_circle_positions(int n, double radius, Vec2 center, double d_r);

/// `n` points equally spaced on the circle starting at angle 0.
std::vector<Vec2> uniform_circle_positions(int n, double radius, Vec2 center);

/// floor(x) that tolerates x landing a few ulps under an integer.
int guarded_floor(double x);

}  // namespace contam
