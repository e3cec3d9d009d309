#include "lcaframe/group.hpp"

#include "lcaframe/error.hpp"

#include <cmath>
#include <numbers>

namespace lcaframe {

GroupSpec GroupSpec::cyclic(std::int64_t modulus) {
  require(modulus >= 2, ErrorKind::Domain, "cyclic group modulus must be at least 2");
  return GroupSpec(GroupKind::FiniteCyclic, modulus, 1);
}

GroupSpec GroupSpec::integers() { return GroupSpec(GroupKind::Integers, 0, 1); }

GroupSpec GroupSpec::torus() { return GroupSpec(GroupKind::Torus, 0, 1); }

GroupSpec GroupSpec::euclidean(int dimension) {
  require(dimension >= 1, ErrorKind::Domain, "euclidean dimension must be at least 1");
  return GroupSpec(GroupKind::Euclidean, 0, dimension);
}

GroupSpec GroupSpec::dual() const {
  switch (kind_) {
    case GroupKind::Integers: return torus();
    case GroupKind::Torus: return integers();
    default: return *this;
  }
}

std::optional<Rational> GroupSpec::period() const {
  if (kind_ == GroupKind::FiniteCyclic) return Rational(modulus_);
  if (kind_ == GroupKind::Torus) return Rational(1);
  return std::nullopt;
}

Rational GroupSpec::point_mass(bool as_dual) const {
  require(discrete(), ErrorKind::Unsupported, name() + " has no atomic Haar measure");
  if (kind_ == GroupKind::FiniteCyclic && as_dual) return Rational(1, modulus_);
  return Rational(1);
}

ExactPoint GroupSpec::reduce(ExactPoint x) const {
  require(static_cast<int>(x.size()) == dimension_, ErrorKind::Domain,
          "element of " + name() + " needs " + std::to_string(dimension_) + " coordinates");
  if (auto p = period())
    for (auto& c : x) c = mod(c, *p);
  return x;
}

Point GroupSpec::reduce(Point x) const {
  require(static_cast<int>(x.size()) == dimension_, ErrorKind::Domain,
          "element of " + name() + " needs " + std::to_string(dimension_) + " coordinates");
  if (auto p = period()) {
    double per = to_double(*p);
    for (auto& c : x) {
      c = std::fmod(c, per);
      if (c < 0) c += per;
      if (c >= per) c = 0;
    }
  }
  return x;
}

std::string GroupSpec::name() const {
  switch (kind_) {
    case GroupKind::FiniteCyclic: return "Z_" + std::to_string(modulus_);
    case GroupKind::Integers: return "Z";
    case GroupKind::Torus: return "T";
    case GroupKind::Euclidean: return "R^" + std::to_string(dimension_);
  }
  return "?";
}

Element::Element(const GroupSpec& group, ExactPoint coords) : group_(group) {
  if (group.discrete())
    for (const auto& c : coords)
      require(is_integer(c), ErrorKind::Domain, "element of " + group.name() + " must be integral");
  exact_ = group.reduce(std::move(coords));
  coords_ = to_point(*exact_);
}

Element::Element(const GroupSpec& group, Point coords) : group_(group) {
  if (group.discrete()) {
    ExactPoint e;
    for (double c : coords) {
      require(std::isfinite(c) && c == std::nearbyint(c), ErrorKind::Domain,
              "element of " + group.name() + " must be integral");
      e.emplace_back(static_cast<std::int64_t>(c));
    }
    exact_ = group.reduce(std::move(e));
    coords_ = to_point(*exact_);
    return;
  }
  for (double c : coords) require(std::isfinite(c), ErrorKind::Domain, "non-finite coordinate");
  coords_ = group.reduce(std::move(coords));
}

double frac_mul(double a, double b) {
  double p = a * b;
  double e = std::fma(a, b, -p);
  return (p - std::nearbyint(p)) + e;
}

double sin_pi_mul(double a, double b) {
  return unit_turns(frac_mul(a, 0.5 * b)).imag();
}

std::complex<double> unit_turns(double turns) {
  double t = turns - std::nearbyint(turns);
  double q = 4.0 * t;
  if (q == std::nearbyint(q)) {
    switch (static_cast<int>(std::nearbyint(q))) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case -1: return {0.0, -1.0};
      default: return {-1.0, 0.0};
    }
  }
  double a = 2.0 * std::numbers::pi * t;
  return {std::cos(a), std::sin(a)};
}

std::complex<double> unit_turns(const Rational& turns) {
  return unit_turns(to_double(mod(turns, Rational(1))));
}

double character_turns(const GroupSpec& group, const Point& x, const Point& gamma) {
  if (group.kind() == GroupKind::FiniteCyclic) {
    // integer coordinates: the product is exact, reduce before dividing
    double t = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) t += x[i] * gamma[i];
    double n = static_cast<double>(group.modulus());
    return std::fmod(t, n) / n;
  }
  double t = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) t += frac_mul(x[i], gamma[i]);
  return t;
}

Rational character_turns(const GroupSpec& group, const ExactPoint& x, const ExactPoint& gamma) {
  const bool cyclic = group.kind() == GroupKind::FiniteCyclic;
  const Rational wrap = cyclic ? Rational(group.modulus()) : Rational(1);
  Rational t = 0;
  for (std::size_t i = 0; i < x.size(); ++i) t += mod(x[i] * gamma[i], wrap);
  if (cyclic) t /= group.modulus();
  return mod(t, Rational(1));
}

std::complex<double> pairing(const GroupSpec& group, const Element& x, const Element& gamma) {
  if (x.group() != group || gamma.group() != group.dual())
    fail(ErrorKind::VariantMismatch, "pairing on " + group.name() + " needs an element of " +
                                         group.name() + " and of " + group.dual().name() +
                                         ", got " + x.group().name() + " and " + gamma.group().name());
  if (x.exact() && gamma.exact()) return unit_turns(character_turns(group, *x.exact(), *gamma.exact()));
  return character(group, x.coords(), gamma.coords());
}

}  // namespace lcaframe
