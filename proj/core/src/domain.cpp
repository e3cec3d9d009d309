#include "lcaframe/domain.hpp"

#include "lcaframe/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lcaframe {

namespace {

constexpr std::size_t kMaxEnumeration = std::size_t{1} << 24;

double wrap_into(double x, double lo, double period) {
  double r = std::fmod(x - lo, period);
  if (r < 0) r += period;
  return lo + r;
}

bool in_interval(double x, double lo, double hi, const std::optional<Rational>& period) {
  if (period) x = wrap_into(x, lo, to_double(*period));
  return lo <= x && x < hi;
}

bool in_interval(const Rational& x, const Rational& lo, const Rational& hi,
                 const std::optional<Rational>& period) {
  Rational y = period ? lo + mod(x - lo, *period) : x;
  return lo <= y && y < hi;
}

bool integral(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

HalfOpenBox shifted(const HalfOpenBox& b, const ExactPoint& s) {
  return {add(b.lo, s), add(b.hi, s)};
}

Rational volume(const HalfOpenBox& b) {
  Rational v = 1;
  for (std::size_t r = 0; r < b.lo.size(); ++r) v *= b.hi[r] - b.lo[r];
  return v;
}

bool boxes_disjoint(const HalfOpenBox& a, const HalfOpenBox& b, const std::optional<Rational>& period) {
  for (std::size_t r = 0; r < a.lo.size(); ++r) {
    if (!period) {
      if (a.hi[r] <= b.lo[r] || b.hi[r] <= a.lo[r]) return true;
      continue;
    }
    Rational start = a.lo[r] + mod(b.lo[r] - a.lo[r], *period);
    Rational len = b.hi[r] - b.lo[r];
    if (start >= a.hi[r] && start + len <= a.lo[r] + *period) return true;
  }
  return false;
}

std::vector<HalfOpenBox> box_pieces(const CosetUnion& u, const GroupSpec& g) {
  auto base = as_box(*u.base, g);
  if (!base) return {};
  std::vector<HalfOpenBox> out;
  for (const auto& s : u.shifts) out.push_back(shifted(*base, s));
  return out;
}

bool pieces_disjoint(const std::vector<HalfOpenBox>& pieces, const GroupSpec& g) {
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (!boxes_disjoint(pieces[i], pieces[j], g.period())) return false;
  return true;
}

ExactPoint reduce_exact(const GroupSpec& g, ExactPoint p) { return g.reduce(std::move(p)); }

}  // namespace

Domain Domain::coset_union(Domain base, std::vector<ExactPoint> shifts) {
  return Domain(CosetUnion{std::make_shared<const Domain>(std::move(base)), std::move(shifts)});
}

bool contains(const Domain& d, const GroupSpec& g, const Point& x) {
  const auto period = g.period();
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerInterval>) {
          if (x.size() != 1 || !integral(x[0])) return false;
          return in_interval(x[0], static_cast<double>(v.lo), static_cast<double>(v.hi) + 1.0, period);
        } else if constexpr (std::is_same_v<T, HalfOpenBox>) {
          if (x.size() != v.lo.size()) return false;
          for (std::size_t r = 0; r < x.size(); ++r)
            if (!in_interval(x[r], to_double(v.lo[r]), to_double(v.hi[r]), period)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, FiniteSubset>) {
          if (g.discrete()) {
            for (double c : x)
              if (!integral(c)) return false;
          }
          Point y = g.reduce(x);
          for (const auto& p : v.points) {
            Point q = g.reduce(to_point(p));
            bool eq = true;
            for (std::size_t r = 0; r < y.size() && eq; ++r) {
              double diff = std::fabs(y[r] - q[r]);
              if (period) diff = std::min(diff, to_double(*period) - diff);
              eq = g.discrete() ? diff == 0.0 : diff < 1e-12;
            }
            if (eq) return true;
          }
          return false;
        } else if constexpr (std::is_same_v<T, Ball>) {
          double n2 = 0;
          for (double c : x) n2 += c * c;
          double r = to_double(v.radius);
          return n2 <= r * r;
        } else if constexpr (std::is_same_v<T, WholeGroup>) {
          return true;
        } else {
          for (const auto& s : v.shifts) {
            Point y = x;
            for (std::size_t r = 0; r < y.size(); ++r) y[r] -= to_double(s[r]);
            if (contains(*v.base, g, y)) return true;
          }
          return false;
        }
      },
      d.variant());
}

bool contains(const Domain& d, const GroupSpec& g, const ExactPoint& x) {
  const auto period = g.period();
  return std::visit(
      [&](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerInterval>) {
          if (x.size() != 1 || !is_integer(x[0])) return false;
          return in_interval(x[0], Rational(v.lo), Rational(v.hi + 1), period);
        } else if constexpr (std::is_same_v<T, HalfOpenBox>) {
          if (x.size() != v.lo.size()) return false;
          for (std::size_t r = 0; r < x.size(); ++r)
            if (!in_interval(x[r], v.lo[r], v.hi[r], period)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, FiniteSubset>) {
          ExactPoint y = reduce_exact(g, x);
          for (const auto& p : v.points)
            if (reduce_exact(g, p) == y) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Ball>) {
          Rational n2 = 0;
          for (const auto& c : x) n2 += c * c;
          return n2 <= v.radius * v.radius;
        } else if constexpr (std::is_same_v<T, WholeGroup>) {
          return true;
        } else {
          for (const auto& s : v.shifts)
            if (contains(*v.base, g, add(x, negated(s)))) return true;
          return false;
        }
      },
      d.variant());
}

bool is_bounded(const Domain& d, const GroupSpec& g) {
  if (d.as<WholeGroup>()) return g.compact();
  if (auto u = d.as<CosetUnion>()) return is_bounded(*u->base, g);
  return true;
}

bool is_enumerable(const Domain& d, const GroupSpec& g) {
  if (!g.discrete()) return d.as<FiniteSubset>() != nullptr;
  if (d.as<Ball>()) return false;
  if (auto u = d.as<CosetUnion>()) return is_enumerable(*u->base, g);
  return is_bounded(d, g);
}

std::vector<ExactPoint> enumerate(const Domain& d, const GroupSpec& g) {
  require(is_enumerable(d, g), ErrorKind::Unsupported, "domain on " + g.name() + " cannot be enumerated");
  std::vector<ExactPoint> out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerInterval>) {
          require(v.hi < v.lo || static_cast<std::size_t>(v.hi - v.lo) < kMaxEnumeration,
                  ErrorKind::Resource, "interval too large to enumerate");
          for (std::int64_t n = v.lo; n <= v.hi; ++n) out.push_back(g.reduce(ExactPoint{Rational(n)}));
        } else if constexpr (std::is_same_v<T, HalfOpenBox>) {
          require(v.lo.size() == 1, ErrorKind::Unsupported, "only one-dimensional discrete boxes enumerate");
          for (std::int64_t n = ceil(v.lo[0]); Rational(n) < v.hi[0]; ++n)
            out.push_back(g.reduce(ExactPoint{Rational(n)}));
        } else if constexpr (std::is_same_v<T, FiniteSubset>) {
          for (const auto& p : v.points) out.push_back(g.reduce(p));
        } else if constexpr (std::is_same_v<T, WholeGroup>) {
          require(g.finite(), ErrorKind::Unsupported, "only finite groups enumerate");
          require(static_cast<std::size_t>(g.modulus()) <= kMaxEnumeration, ErrorKind::Resource,
                  "group too large to enumerate");
          for (std::int64_t n = 0; n < g.modulus(); ++n) out.push_back(ExactPoint{Rational(n)});
        } else if constexpr (std::is_same_v<T, CosetUnion>) {
          auto base = enumerate(*v.base, g);
          for (const auto& s : v.shifts)
            for (const auto& p : base) out.push_back(g.reduce(add(p, s)));
        }
      },
      d.variant());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Rational> measure(const Domain& d, const GroupSpec& g, bool as_dual) {
  if (g.discrete()) {
    if (!is_enumerable(d, g)) return std::nullopt;
    return Rational(static_cast<std::int64_t>(enumerate(d, g).size())) * g.point_mass(as_dual);
  }
  if (auto b = d.as<HalfOpenBox>()) return volume(*b);
  if (d.as<WholeGroup>()) {
    if (g.compact()) return Rational(1);
    return std::nullopt;
  }
  if (auto u = d.as<CosetUnion>()) {
    auto pieces = box_pieces(*u, g);
    if (pieces.empty()) return std::nullopt;
    require(pieces_disjoint(pieces, g), ErrorKind::Construction, "coset union pieces overlap");
    return volume(pieces.front()) * Rational(static_cast<std::int64_t>(pieces.size()));
  }
  return std::nullopt;
}

double measure_value(const Domain& d, const GroupSpec& g, bool as_dual) {
  if (auto m = measure(d, g, as_dual)) return to_double(*m);
  if (auto b = d.as<Ball>()) {
    double s = b->dimension;
    return std::pow(std::numbers::pi, s / 2) / std::tgamma(s / 2 + 1) * std::pow(to_double(b->radius), s);
  }
  fail(ErrorKind::Unsupported, "domain on " + g.name() + " has no finite measure");
}

HalfOpenBox bounding_box(const Domain& d, const GroupSpec& g) {
  return std::visit(
      [&](const auto& v) -> HalfOpenBox {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntegerInterval>) {
          return {{Rational(v.lo)}, {Rational(v.hi + 1)}};
        } else if constexpr (std::is_same_v<T, HalfOpenBox>) {
          return v;
        } else if constexpr (std::is_same_v<T, FiniteSubset>) {
          require(!v.points.empty(), ErrorKind::Domain, "empty finite subset has no bounding box");
          HalfOpenBox b{v.points.front(), v.points.front()};
          for (const auto& p : v.points)
            for (std::size_t r = 0; r < p.size(); ++r) {
              b.lo[r] = std::min(b.lo[r], p[r]);
              b.hi[r] = std::max(b.hi[r], p[r]);
            }
          for (auto& h : b.hi) h += g.discrete() ? Rational(1) : Rational(0);
          return b;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return {ExactPoint(v.dimension, -v.radius), ExactPoint(v.dimension, v.radius)};
        } else if constexpr (std::is_same_v<T, WholeGroup>) {
          auto p = g.period();
          require(p.has_value(), ErrorKind::Domain, "unbounded domain on " + g.name());
          return {ExactPoint(g.dimension(), Rational(0)), ExactPoint(g.dimension(), *p)};
        } else {
          HalfOpenBox base = bounding_box(*v.base, g);
          std::optional<HalfOpenBox> out;
          for (const auto& s : v.shifts) {
            HalfOpenBox b = shifted(base, s);
            if (!out) {
              out = b;
              continue;
            }
            for (std::size_t r = 0; r < b.lo.size(); ++r) {
              out->lo[r] = std::min(out->lo[r], b.lo[r]);
              out->hi[r] = std::max(out->hi[r], b.hi[r]);
            }
          }
          require(out.has_value(), ErrorKind::Domain, "empty coset union");
          return *out;
        }
      },
      d.variant());
}

std::optional<HalfOpenBox> as_box(const Domain& d, const GroupSpec& g) {
  if (g.discrete()) return std::nullopt;
  if (auto b = d.as<HalfOpenBox>()) return *b;
  if (d.as<WholeGroup>() && g.compact()) return bounding_box(d, g);
  if (auto u = d.as<CosetUnion>()) {
    auto pieces = box_pieces(*u, g);
    if (pieces.empty() || !pieces_disjoint(pieces, g)) return std::nullopt;
    HalfOpenBox bb = bounding_box(d, g);
    if (volume(bb) != volume(pieces.front()) * Rational(static_cast<std::int64_t>(pieces.size())))
      return std::nullopt;
    return bb;
  }
  return std::nullopt;
}

bool same_set(const Domain& a, const Domain& b, const GroupSpec& g) {
  if (is_enumerable(a, g) && is_enumerable(b, g)) return enumerate(a, g) == enumerate(b, g);
  auto ba = as_box(a, g);
  auto bb = as_box(b, g);
  if (ba && bb) return ba->lo == bb->lo && ba->hi == bb->hi;
  auto la = a.as<Ball>();
  auto lb = b.as<Ball>();
  if (la && lb) return la->radius == lb->radius && la->dimension == lb->dimension;
  return false;
}

bool is_subset(const Domain& a, const Domain& b, const GroupSpec& g) {
  if (is_enumerable(a, g)) {
    for (const auto& p : enumerate(a, g))
      if (!contains(b, g, p)) return false;
    return true;
  }
  if (b.as<WholeGroup>()) return true;
  auto ba = as_box(a, g);
  auto bb = as_box(b, g);
  if (ba && bb) {
    for (std::size_t r = 0; r < ba->lo.size(); ++r)
      if (ba->lo[r] < bb->lo[r] || ba->hi[r] > bb->hi[r]) return false;
    return true;
  }
  if (auto ball = a.as<Ball>()) {
    if (bb) {
      for (std::size_t r = 0; r < bb->lo.size(); ++r)
        if (-ball->radius < bb->lo[r] || ball->radius >= bb->hi[r]) return false;
      return true;
    }
    if (auto other = b.as<Ball>()) return ball->radius <= other->radius;
  }
  if (ba) {
    if (auto ball = b.as<Ball>()) {
      Rational n2 = 0;
      for (std::size_t r = 0; r < ba->lo.size(); ++r) {
        Rational m = std::max(ba->lo[r] < 0 ? -ba->lo[r] : ba->lo[r], ba->hi[r] < 0 ? -ba->hi[r] : ba->hi[r]);
        n2 += m * m;
      }
      return n2 <= ball->radius * ball->radius;
    }
  }
  fail(ErrorKind::Unsupported, "cannot decide inclusion for these domains on " + g.name());
}

}  // namespace lcaframe
