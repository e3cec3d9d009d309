#pragma once

#include "lcaframe/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace lcaframe {

enum class GroupKind { FiniteCyclic, Integers, Torus, Euclidean };

// One of the elementary groups Z_N, Z, T, R^s. The dual of a GroupSpec is again
// a GroupSpec, so the same type describes both G and its dual.
class GroupSpec {
 public:
  static GroupSpec cyclic(std::int64_t modulus);
  static GroupSpec integers();
  static GroupSpec torus();
  static GroupSpec euclidean(int dimension);

  GroupKind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  int dimension() const { return dimension_; }

  GroupSpec dual() const;
  bool discrete() const { return kind_ == GroupKind::FiniteCyclic || kind_ == GroupKind::Integers; }
  bool compact() const { return kind_ == GroupKind::FiniteCyclic || kind_ == GroupKind::Torus; }
  bool finite() const { return kind_ == GroupKind::FiniteCyclic; }

  // Coordinates repeat with this period (N on Z_N, 1 on T); none on Z and R^s.
  std::optional<Rational> period() const;
  // Haar mass of a single point; only meaningful for discrete groups.
  // Z_N as a primal group has counting measure, as a dual group counting/N.
  Rational point_mass(bool as_dual) const;

  ExactPoint reduce(ExactPoint x) const;
  Point reduce(Point x) const;

  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, std::int64_t modulus, int dimension)
      : kind_(kind), modulus_(modulus), dimension_(dimension) {}

  GroupKind kind_;
  std::int64_t modulus_;
  int dimension_;
};

// An element of a group with validated, reduced coordinates. Exact coordinates
// are kept when supplied; float coordinates are accepted on T and R^s only.
class Element {
 public:
  Element(const GroupSpec& group, ExactPoint coords);
  Element(const GroupSpec& group, Point coords);

  const GroupSpec& group() const { return group_; }
  const Point& coords() const { return coords_; }
  const std::optional<ExactPoint>& exact() const { return exact_; }

 private:
  GroupSpec group_;
  Point coords_;
  std::optional<ExactPoint> exact_;
};

// a*b minus the nearest integer, with the rounding error of the product
// recovered, so large products keep their fractional part.
double frac_mul(double a, double b);
// sin(pi x) for x = a*b, accurate for large products.
double sin_pi_mul(double a, double b);

// e^{2 pi i t}; exact at multiples of a quarter turn.
std::complex<double> unit_turns(double turns);
std::complex<double> unit_turns(const Rational& turns);

// Character value (x, gamma) for x in G and gamma in the dual of G.
std::complex<double> pairing(const GroupSpec& group, const Element& x, const Element& gamma);

// Unchecked fast paths on raw coordinates.
double character_turns(const GroupSpec& group, const Point& x, const Point& gamma);
Rational character_turns(const GroupSpec& group, const ExactPoint& x, const ExactPoint& gamma);
inline std::complex<double> character(const GroupSpec& group, const Point& x, const Point& gamma) {
  return unit_turns(character_turns(group, x, gamma));
}

}  // namespace lcaframe
