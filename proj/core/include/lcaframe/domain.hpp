#pragma once

#include "lcaframe/group.hpp"
#include "lcaframe/rational.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace lcaframe {

class Domain;

// {lo, ..., hi} on a one-dimensional discrete group.
struct IntegerInterval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
};

// Product of half-open intervals [lo_r, hi_r).
struct HalfOpenBox {
  ExactPoint lo;
  ExactPoint hi;
};

struct FiniteSubset {
  std::vector<ExactPoint> points;
};

// Closed Euclidean ball {|x|_2 <= radius} about the origin.
struct Ball {
  Rational radius;
  int dimension = 1;
};

struct WholeGroup {};

// Union of the translates shift + base.
struct CosetUnion {
  std::shared_ptr<const Domain> base;
  std::vector<ExactPoint> shifts;
};

class Domain {
 public:
  using Variant = std::variant<IntegerInterval, HalfOpenBox, FiniteSubset, Ball, WholeGroup, CosetUnion>;

  Domain() : v_(WholeGroup{}) {}
  Domain(IntegerInterval d) : v_(d) {}
  Domain(HalfOpenBox d) : v_(std::move(d)) {}
  Domain(FiniteSubset d) : v_(std::move(d)) {}
  Domain(Ball d) : v_(d) {}
  Domain(WholeGroup d) : v_(d) {}
  Domain(CosetUnion d) : v_(std::move(d)) {}

  static Domain coset_union(Domain base, std::vector<ExactPoint> shifts);

  const Variant& variant() const { return v_; }
  template <class T>
  const T* as() const { return std::get_if<T>(&v_); }

 private:
  Variant v_;
};

bool contains(const Domain& d, const GroupSpec& g, const Point& x);
bool contains(const Domain& d, const GroupSpec& g, const ExactPoint& x);

bool is_bounded(const Domain& d, const GroupSpec& g);
// Discrete group and bounded domain: the points can be listed.
bool is_enumerable(const Domain& d, const GroupSpec& g);
// Reduced, sorted, duplicate-free list of points.
std::vector<ExactPoint> enumerate(const Domain& d, const GroupSpec& g);

// Exact Haar measure when available. On discrete groups as_dual selects the
// dual-side normalization (relevant for Z_N only). Balls have no exact measure.
std::optional<Rational> measure(const Domain& d, const GroupSpec& g, bool as_dual);
double measure_value(const Domain& d, const GroupSpec& g, bool as_dual);

// Smallest axis-aligned box containing the domain (continuous groups).
HalfOpenBox bounding_box(const Domain& d, const GroupSpec& g);
// The domain as a single box, if it is exactly one.
std::optional<HalfOpenBox> as_box(const Domain& d, const GroupSpec& g);

bool same_set(const Domain& a, const Domain& b, const GroupSpec& g);
bool is_subset(const Domain& a, const Domain& b, const GroupSpec& g);

}  // namespace lcaframe
