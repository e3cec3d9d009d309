#pragma once

#include "lcaframe/domain.hpp"

#include <cstdint>
#include <vector>

namespace lcaframe {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// Finite domains are always sampled exhaustively. Continuous domains get a
// regular grid of about grid_points nodes over the bounding box (left
// endpoints, so the origin is hit when it is a corner) plus random_points
// uniform draws. explicit_points, when given, replace all of that.
struct SamplingPlan {
  std::size_t grid_points = 4096;
  std::size_t random_points = 1024;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Point> explicit_points;

  static SamplingPlan points(std::vector<Point> pts) {
    SamplingPlan p;
    p.grid_points = 0;
    p.random_points = 0;
    p.explicit_points = std::move(pts);
    return p;
  }
  bool empty() const { return grid_points == 0 && random_points == 0 && explicit_points.empty(); }
};

std::vector<Point> sample_domain(const Domain& d, const GroupSpec& g, const SamplingPlan& plan);

// True when sample_domain enumerates every point of d.
bool samples_exhaustively(const Domain& d, const GroupSpec& g, const SamplingPlan& plan);

}  // namespace lcaframe
