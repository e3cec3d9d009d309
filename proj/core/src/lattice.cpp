#include "lcaframe/lattice.hpp"

#include "lcaframe/error.hpp"

#include <algorithm>
#include <cmath>

namespace lcaframe {

namespace {

constexpr std::int64_t kMaxPoints = std::int64_t{1} << 24;

}  // namespace

Lattice::Lattice(GroupSpec group, std::vector<Rational> steps, bool dual_side)
    : group_(group), steps_(std::move(steps)), dual_side_(dual_side) {
  require(static_cast<int>(steps_.size()) == group_.dimension(), ErrorKind::Lattice,
          "lattice in " + group_.name() + " needs " + std::to_string(group_.dimension()) + " steps");
  for (const auto& s : steps_) {
    require(s > 0, ErrorKind::Lattice, "lattice steps must be positive");
    switch (group_.kind()) {
      case GroupKind::Integers:
        require(is_integer(s), ErrorKind::Lattice, "lattice in Z needs an integer step");
        break;
      case GroupKind::FiniteCyclic:
        require(is_integer(s) && group_.modulus() % s.numerator() == 0, ErrorKind::Lattice,
                "lattice in " + group_.name() + " needs a step dividing the modulus");
        break;
      case GroupKind::Torus:
        require(s.numerator() == 1, ErrorKind::Lattice, "lattice in T needs a step 1/n");
        break;
      case GroupKind::Euclidean:
        break;
    }
  }
}

Lattice Lattice::annihilator() const {
  Rational p = group_.period().value_or(Rational(1));
  std::vector<Rational> out;
  for (const auto& s : steps_) out.push_back(p / s);
  return Lattice(group_.dual(), std::move(out), !dual_side_);
}

Rational Lattice::density() const {
  Rational v = 1;
  for (const auto& s : steps_) v *= s;
  if (group_.discrete()) v *= group_.point_mass(dual_side_);
  return v;
}

bool Lattice::contains(const ExactPoint& x) const {
  if (x.size() != steps_.size()) return false;
  for (std::size_t r = 0; r < x.size(); ++r)
    if (!is_integer(x[r] / steps_[r])) return false;
  return true;
}

bool Lattice::contains(const Point& x, double tol) const {
  if (x.size() != steps_.size()) return false;
  for (std::size_t r = 0; r < x.size(); ++r) {
    double q = x[r] / to_double(steps_[r]);
    if (std::fabs(q - std::nearbyint(q)) > tol) return false;
  }
  return true;
}

bool Lattice::is_sublattice_of(const Lattice& finer) const {
  if (group_ != finer.group_) return false;
  for (std::size_t r = 0; r < steps_.size(); ++r)
    if (!is_integer(steps_[r] / finer.steps_[r])) return false;
  return true;
}

std::int64_t Lattice::index_in(const Lattice& finer) const {
  require(is_sublattice_of(finer), ErrorKind::Lattice, "lattices are not nested");
  std::int64_t n = 1;
  for (std::size_t r = 0; r < steps_.size(); ++r) n *= (steps_[r] / finer.steps_[r]).numerator();
  return n;
}

std::vector<ExactPoint> Lattice::coset_representatives(const Lattice& coarser) const {
  require(coarser.is_sublattice_of(*this), ErrorKind::Lattice, "lattices are not nested");
  const std::size_t s = steps_.size();
  std::vector<std::int64_t> counts(s);
  std::int64_t total = 1;
  for (std::size_t r = 0; r < s; ++r) {
    counts[r] = (coarser.steps_[r] / steps_[r]).numerator();
    total *= counts[r];
  }
  std::vector<ExactPoint> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) {
    ExactPoint p(s);
    std::int64_t rest = i;
    for (std::size_t r = 0; r < s; ++r) {
      p[r] = steps_[r] * Rational(rest % counts[r]);
      rest /= counts[r];
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<std::int64_t> Lattice::size() const {
  auto p = group_.period();
  if (!p) return std::nullopt;
  std::int64_t n = 1;
  for (const auto& s : steps_) n *= (*p / s).numerator();
  return n;
}

std::vector<ExactPoint> Lattice::points_in(const Domain& window) const {
  const std::size_t s = steps_.size();
  std::vector<std::int64_t> lo(s), hi(s);
  if (auto n = size(); n && (window.as<WholeGroup>() || !is_bounded(window, group_) || group_.compact())) {
    Rational p = *group_.period();
    for (std::size_t r = 0; r < s; ++r) {
      lo[r] = 0;
      hi[r] = (p / steps_[r]).numerator() - 1;
    }
  } else {
    require(is_bounded(window, group_), ErrorKind::Domain, "lattice window must be bounded");
    HalfOpenBox b = bounding_box(window, group_);
    for (std::size_t r = 0; r < s; ++r) {
      lo[r] = ceil(b.lo[r] / steps_[r]);
      // include the upper face: balls and intervals may be closed there
      hi[r] = floor(b.hi[r] / steps_[r]);
    }
  }
  std::int64_t total = 1;
  for (std::size_t r = 0; r < s; ++r) {
    if (hi[r] < lo[r]) return {};
    total *= hi[r] - lo[r] + 1;
    require(total <= kMaxPoints, ErrorKind::Resource, "lattice window holds too many points");
  }
  std::vector<ExactPoint> out;
  std::vector<std::int64_t> j = lo;
  for (std::int64_t i = 0; i < total; ++i) {
    ExactPoint p(s);
    for (std::size_t r = 0; r < s; ++r) p[r] = steps_[r] * Rational(j[r]);
    p = group_.reduce(std::move(p));
    if (::lcaframe::contains(window, group_, p)) out.push_back(std::move(p));
    for (std::size_t r = 0; r < s; ++r) {
      if (++j[r] <= hi[r]) break;
      j[r] = lo[r];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lcaframe
