#pragma once

#include "lcaframe/domain.hpp"
#include "lcaframe/group.hpp"

#include <optional>
#include <vector>

namespace lcaframe {

// Diagonal lattice prod_r step_r Z inside a group (reduced modulo the period on
// Z_N and T). dual_side marks a lattice that lives in the dual group, which
// matters for the Haar normalization of Z_N.
class Lattice {
 public:
  Lattice(GroupSpec group, std::vector<Rational> steps, bool dual_side = false);

  const GroupSpec& group() const { return group_; }
  const std::vector<Rational>& steps() const { return steps_; }
  bool dual_side() const { return dual_side_; }

  Lattice annihilator() const;
  // Haar measure of a fundamental domain.
  Rational density() const;

  bool contains(const ExactPoint& x) const;
  bool contains(const Point& x, double tol = 1e-9) const;
  bool is_sublattice_of(const Lattice& finer) const;
  // |finer / this|.
  std::int64_t index_in(const Lattice& finer) const;
  // Representatives of this / coarser inside the box [0, coarser step), first
  // coordinate varying fastest; the first one is 0.
  std::vector<ExactPoint> coset_representatives(const Lattice& coarser) const;

  std::optional<std::int64_t> size() const;
  std::vector<ExactPoint> points_in(const Domain& window) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  GroupSpec group_;
  std::vector<Rational> steps_;
  bool dual_side_;
};

}  // namespace lcaframe
