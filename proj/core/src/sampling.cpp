#include "lcaframe/sampling.hpp"

#include "lcaframe/error.hpp"

#include <cmath>
#include <random>

namespace lcaframe {

bool samples_exhaustively(const Domain& d, const GroupSpec& g, const SamplingPlan& plan) {
  return plan.explicit_points.empty() && is_enumerable(d, g);
}

std::vector<Point> sample_domain(const Domain& d, const GroupSpec& g, const SamplingPlan& plan) {
  require(!plan.empty(), ErrorKind::Domain, "sampling plan is empty");
  if (!plan.explicit_points.empty()) return plan.explicit_points;
  std::vector<Point> out;
  if (is_enumerable(d, g)) {
    for (const auto& p : enumerate(d, g)) out.push_back(to_point(p));
    return out;
  }
  require(is_bounded(d, g), ErrorKind::Domain, "cannot sample an unbounded domain");
  const HalfOpenBox box = bounding_box(d, g);
  const std::size_t s = box.lo.size();
  std::vector<double> lo(s), width(s);
  for (std::size_t r = 0; r < s; ++r) {
    lo[r] = to_double(box.lo[r]);
    width[r] = to_double(box.hi[r] - box.lo[r]);
  }
  if (plan.grid_points > 0) {
    auto per_axis = static_cast<std::size_t>(
        std::ceil(std::pow(static_cast<double>(plan.grid_points), 1.0 / static_cast<double>(s)) - 1e-9));
    std::vector<std::size_t> j(s, 0);
    std::size_t total = 1;
    for (std::size_t r = 0; r < s; ++r) total *= per_axis;
    for (std::size_t i = 0; i < total; ++i) {
      Point p(s);
      for (std::size_t r = 0; r < s; ++r) p[r] = lo[r] + width[r] * static_cast<double>(j[r]) / static_cast<double>(per_axis);
      if (contains(d, g, p)) out.push_back(std::move(p));
      for (std::size_t r = 0; r < s; ++r) {
        if (++j[r] < per_axis) break;
        j[r] = 0;
      }
    }
  }
  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t drawn = 0;
  std::size_t attempts = 0;
  while (drawn < plan.random_points && attempts < 64 * plan.random_points + 64) {
    ++attempts;
    Point p(s);
    for (std::size_t r = 0; r < s; ++r) p[r] = lo[r] + width[r] * unit(rng);
    if (!contains(d, g, p)) continue;
    out.push_back(std::move(p));
    ++drawn;
  }
  require(!out.empty(), ErrorKind::Domain, "sampling produced no points inside the domain");
  return out;
}

}  // namespace lcaframe
