#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "contam/geometry.hpp"

namespace contam::detail {

/// Uniform bucket grid over a fixed point set; radius queries return indices
/// in ascending order.
class SpatialGrid {
 public:
  SpatialGrid(std::span<const Vec2> points, double cell) : points_(points), cell_(cell) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      cells_[key(cell_of(points[i].x), cell_of(points[i].y))].push_back(i);
    }
  }

  std::vector<std::size_t> within(Vec2 c, double radius) const {
    std::vector<std::size_t> out;
    const auto x0 = cell_of(c.x - radius), x1 = cell_of(c.x + radius);
    const auto y0 = cell_of(c.y - radius), y1 = cell_of(c.y + radius);
    const double r2 = radius * radius;
    for (auto cx = x0; cx <= x1; ++cx) {
      for (auto cy = y0; cy <= y1; ++cy) {
        auto it = cells_.find(key(cx, cy));
        if (it == cells_.end()) continue;
        for (auto i : it->second) {
          const Vec2 d = points_[i] - c;
          if (d.dot(d) <= r2) out.push_back(i);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
  static std::int64_t key(std::int64_t cx, std::int64_t cy) { return (cx << 32) ^ (cy & 0xffffffff); }

  std::span<const Vec2> points_;
  double cell_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> cells_;
};

}  // namespace contam::detail
