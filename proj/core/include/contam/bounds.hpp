#pragma once

#include <vector>

#include "contam/geometry.hpp"

namespace contam {

struct DenseCircleSpec {
  double radius = 0.0;
  int count = 0;
  std::vector<Vec2> positions;
};

/// Largest possible connectivity factor: dense packing on the S_max circle.
int max_connectivity_factor(const WorldConfig& cfg);

/// Upper bound on the connectivity factor of a weak point.
int weak_point_bound(const WorldConfig& cfg);

struct ConcealedSector {
  double beta = 0.0;  // radians
  int count = 0;
};

/// Sector of a dense circle hidden from one member by its direct neighbors.
/// Throws DomainError if radius <= d_r.
ConcealedSector concealed_sector(double radius, const WorldConfig& cfg);

/// Dense circle of radius S_max/2 at full capacity, centered on the origin.
DenseCircleSpec odc(const WorldConfig& cfg);

/// WPC of `count` agents packed densely on a circle of `radius`, using the
/// sampled geometric fence. Throws CapacityError when the packing is infeasible.
/// When the placement splits into several components the largest value is returned.
int dense_circle_wpc(double radius, int count, const WorldConfig& cfg);

}  // namespace contam
