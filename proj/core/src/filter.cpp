#include "lcaframe/filter.hpp"

#include "lcaframe/error.hpp"

#include <cmath>

namespace lcaframe {

namespace {

double gain_of(const Rational& gain_sq) {
  require(gain_sq >= 0, ErrorKind::Construction, "filter gain must be nonnegative");
  return std::sqrt(to_double(gain_sq));
}

}  // namespace

PeriodicFilter::PeriodicFilter(const GroupSpec& group, Lattice periodicity, TrigPolynomial poly, Rational gain_sq)
    : periodicity_(std::move(periodicity)), group_(group), rep_(std::move(poly)), gain_sq_(gain_sq),
      gain_(gain_of(gain_sq)) {
  const auto& p = std::get<TrigPolynomial>(rep_);
  require(group.dual() == periodicity_.group(), ErrorKind::VariantMismatch,
          "trig filter step lives in " + group.name() + " but periodicity in " + periodicity_.group().name());
  require(p.shifts.size() == p.coeffs.size(), ErrorKind::Construction, "trig filter needs one shift per coefficient");
  require(static_cast<int>(p.eta.size()) == group.dimension(), ErrorKind::Construction, "trig filter step has wrong dimension");
  require(periodicity_.annihilator().contains(p.eta), ErrorKind::Construction,
          "trig filter step is not in the annihilator of its periodicity lattice");
  for (auto j : p.shifts) {
    Point x(p.eta.size());
    for (std::size_t r = 0; r < x.size(); ++r) x[r] = -static_cast<double>(j) * to_double(p.eta[r]);
    shifted_eta_.push_back(std::move(x));
  }
}

PeriodicFilter::PeriodicFilter(Lattice periodicity, CosetPiecewise pieces, Rational gain_sq)
    : periodicity_(std::move(periodicity)), rep_(std::move(pieces)), gain_sq_(gain_sq), gain_(gain_of(gain_sq)) {
  require(std::get<CosetPiecewise>(rep_).anchor.size() == periodicity_.steps().size(), ErrorKind::Construction,
          "piecewise filter anchor has wrong dimension");
}

PeriodicFilter::PeriodicFilter(Lattice periodicity, Tabulated table)
    : periodicity_(std::move(periodicity)), rep_(std::move(table)), gain_sq_(1), gain_(1.0) {
  const auto& t = std::get<Tabulated>(rep_);
  require(t.grid.size() == t.values.size(), ErrorKind::Construction, "tabulated filter needs one value per grid point");
  require(t.anchor.size() == periodicity_.steps().size(), ErrorKind::Construction,
          "tabulated filter anchor has wrong dimension");
}

FilterKind PeriodicFilter::kind() const {
  if (trig()) return FilterKind::Trig;
  if (piecewise()) return FilterKind::Piecewise;
  return FilterKind::Tabulated;
}

Point PeriodicFilter::reduce(const Point& gamma, const ExactPoint& anchor) const {
  require(gamma.size() == anchor.size(), ErrorKind::Domain, "argument has wrong dimension");
  Point out(gamma.size());
  for (std::size_t r = 0; r < gamma.size(); ++r) {
    double a = to_double(anchor[r]);
    double step = to_double(periodicity_.steps()[r]);
    double t = std::fmod(gamma[r] - a, step);
    if (t < 0) t += step;
    if (t >= step) t = 0;
    out[r] = a + t;
  }
  return out;
}

Complex PeriodicFilter::base(const Point& gamma) const {
  if (const auto* p = trig()) {
    Complex sum = 0;
    for (std::size_t i = 0; i < p->coeffs.size(); ++i)
      if (p->coeffs[i] != Complex(0)) sum += p->coeffs[i] * character(*group_, shifted_eta_[i], gamma);
    return sum;
  }
  if (const auto* p = piecewise()) {
    Point y = reduce(gamma, p->anchor);
    for (const auto& piece : p->pieces)
      if (contains(piece.domain, dual_group(), y)) return piece.value;
    return p->otherwise;
  }
  const auto& t = *tabulated();
  Point y = reduce(gamma, t.anchor);
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    Point g = reduce(t.grid[i], t.anchor);
    bool hit = true;
    for (std::size_t r = 0; r < y.size() && hit; ++r) {
      double step = to_double(periodicity_.steps()[r]);
      double diff = std::fabs(g[r] - y[r]);
      hit = std::min(diff, step - diff) <= 1e-12;
    }
    if (hit) return t.values[i];
  }
  fail(ErrorKind::InterpolationUnsupported, "tabulated filter queried off its grid");
}

Complex PeriodicFilter::eval(const Element& gamma) const {
  require(gamma.group() == dual_group(), ErrorKind::VariantMismatch,
          "filter on " + dual_group().name() + " evaluated at an element of " + gamma.group().name());
  return (*this)(gamma.coords());
}

PeriodicFilter PeriodicFilter::zeroed() const {
  PeriodicFilter out = *this;
  if (auto* p = std::get_if<TrigPolynomial>(&out.rep_)) {
    for (auto& c : p->coeffs) c = 0;
  } else if (auto* p = std::get_if<CosetPiecewise>(&out.rep_)) {
    for (auto& piece : p->pieces) piece.value = 0;
    p->otherwise = 0;
  } else {
    for (auto& v : std::get<Tabulated>(out.rep_).values) v = 0;
  }
  return out;
}

Mask mask_coefficients(const PeriodicFilter& f) {
  const auto* p = f.trig();
  require(p != nullptr, ErrorKind::VariantMismatch, "mask coefficients exist only for trig filters");
  Mask m{p->eta, p->shifts, p->coeffs};
  for (auto& c : m.coeffs) c *= f.gain();
  return m;
}

}  // namespace lcaframe
