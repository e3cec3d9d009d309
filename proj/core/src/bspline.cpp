#include "lcaframe/bspline.hpp"

#include "lcaframe/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lcaframe {

namespace {

std::vector<std::int64_t> binomial_row(int n) {
  std::vector<std::int64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

// Coefficients of (1+z)^a (1-z)^b in increasing powers of z.
std::vector<std::int64_t> binomial_product(int a, int b) {
  std::vector<std::int64_t> p{1};
  auto times = [&](std::int64_t sign) {
    std::vector<std::int64_t> q(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j];
      q[j + 1] += sign * p[j];
    }
    p = std::move(q);
  };
  for (int i = 0; i < a; ++i) times(1);
  for (int i = 0; i < b; ++i) times(-1);
  return p;
}

PeriodicFilter trig_filter(const LatticeChain& chain, int k, const std::vector<std::int64_t>& coeffs, Rational gain_sq) {
  TrigPolynomial poly;
  poly.eta = chain.eta(k);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    poly.shifts.push_back(static_cast<std::int64_t>(j));
    poly.coeffs.emplace_back(static_cast<double>(coeffs[j]), 0.0);
  }
  return PeriodicFilter(chain.group(), chain.level(k + 1).annihilator, std::move(poly), gain_sq);
}

void require_order(int N) { require(N >= 1, ErrorKind::Domain, "B-spline order must be at least 1"); }

// Sum over x in {0..L-1} of e^{-2 pi i x u}.
Complex dirichlet(std::int64_t L, double u) {
  double r = u - std::nearbyint(u);
  if (r == 0.0) return static_cast<double>(L);
  double Ld = static_cast<double>(L);
  double ratio = sin_pi_mul(Ld, r) / sin_pi_mul(1.0, r);
  return ratio * unit_turns(-frac_mul(Ld - 1.0, 0.5 * r));
}

// Integral over [0, h) of e^{-2 pi i x gamma}.
Complex box_integral(double h, double gamma) {
  double u = gamma * h;
  if (u == 0.0) return h;
  return h * (sin_pi_mul(1.0, u) / (std::numbers::pi * u)) * unit_turns(-0.5 * u);
}

}  // namespace

double cardinal_bspline(int N, double t) {
  if (t < 0.0 || t >= static_cast<double>(N)) return 0.0;
  if (N == 1) return 1.0;
  auto c = binomial_row(N);
  double sum = 0.0;
  for (int j = 0; j <= N; ++j) {
    double d = t - j;
    if (d <= 0.0) break;
    sum += (j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(c[static_cast<std::size_t>(j)]) * std::pow(d, N - 1);
  }
  return sum / std::tgamma(static_cast<double>(N));
}

BSplineGenerator::BSplineGenerator(const LatticeChain& chain, int k, int N)
    : group_(chain.group()), k_(k), N_(N), mu_(chain.measure_Q(k)) {
  require_order(N);
  norm_ = std::pow(to_double(mu_), 0.5 - N);
  const Domain& Q = chain.level(k).Q;
  if (group_.discrete()) {
    const auto* iv = Q.as<IntegerInterval>();
    require(iv != nullptr, ErrorKind::Unsupported, "B-spline on " + group_.name() + " needs an interval Q_k");
    points_ = iv->hi - iv->lo + 1;
    lo_ = iv->lo;
    std::vector<std::int64_t> counts{1};
    for (int n = 0; n < N; ++n) {
      std::vector<std::int64_t> next(counts.size() + static_cast<std::size_t>(points_) - 1, 0);
      for (std::size_t i = 0; i < counts.size(); ++i)
        for (std::int64_t j = 0; j < points_; ++j) next[i + static_cast<std::size_t>(j)] += counts[i];
      counts = std::move(next);
    }
    Sequence seq{N * iv->lo, {}};
    for (auto c : counts) seq.values.emplace_back(static_cast<double>(c) * norm_, 0.0);
    if (group_.finite()) {
      const std::int64_t n = group_.modulus();
      Sequence folded{0, std::vector<Complex>(static_cast<std::size_t>(n))};
      for (std::int64_t x = seq.start; x < seq.end(); ++x)
        folded.values[static_cast<std::size_t>(((x % n) + n) % n)] += seq.at(x);
      seq = std::move(folded);
    }
    samples_ = std::move(seq);
  } else {
    auto box = as_box(Q, group_);
    require(box.has_value(), ErrorKind::Unsupported, "B-spline on " + group_.name() + " needs a box Q_k");
    for (std::size_t r = 0; r < box->lo.size(); ++r) {
      require(box->lo[r] == Rational(0), ErrorKind::Unsupported, "B-spline needs Q_k anchored at the origin");
      widths_.push_back(to_double(box->hi[r]));
    }
  }
}

double BSplineGenerator::operator()(const Point& x) const {
  require(static_cast<int>(x.size()) == group_.dimension(), ErrorKind::Domain, "argument has wrong dimension");
  if (samples_) {
    auto n = static_cast<std::int64_t>(std::nearbyint(x[0]));
    if (group_.finite()) n = ((n % group_.modulus()) + group_.modulus()) % group_.modulus();
    return samples_->at(n).real();
  }
  double value = 1.0;
  for (std::size_t r = 0; r < widths_.size(); ++r) {
    const double h = widths_[r];
    double axis = 0.0;
    if (group_.kind() == GroupKind::Torus) {
      double t = x[r] - std::floor(x[r]);
      for (double shift = 0.0; t + shift < N_ * h; shift += 1.0) axis += cardinal_bspline(N_, (t + shift) / h);
    } else {
      axis = cardinal_bspline(N_, x[r] / h);
    }
    value *= axis / std::sqrt(h);
  }
  return value;
}

Complex BSplineGenerator::hat(const Point& gamma) const {
  require(static_cast<int>(gamma.size()) == group_.dimension(), ErrorKind::Domain, "argument has wrong dimension");
  Complex integral = 1.0;
  if (group_.discrete()) {
    double u = gamma[0];
    if (group_.finite()) u /= static_cast<double>(group_.modulus());
    integral = dirichlet(points_, u) * unit_turns(-frac_mul(static_cast<double>(lo_), u));
  } else {
    for (std::size_t r = 0; r < widths_.size(); ++r) integral *= box_integral(widths_[r], gamma[r]);
  }
  return norm_ * std::pow(integral, N_);
}

Generator BSplineGenerator::to_generator() const {
  Generator g;
  g.name = "Phi_" + std::to_string(k_);
  g.level = k_;
  g.index = 0;
  auto self = std::make_shared<const BSplineGenerator>(*this);
  g.spectrum = [self](const Point& gamma) { return self->hat(gamma); };
  g.time = samples_;
  g.time_eval = [self](const Point& x) { return (*self)(x); };
  return g;
}

BSplineGenerator bspline_time(const LatticeChain& chain, int k, int N) { return BSplineGenerator(chain, k, N); }

Complex bspline_hat(const LatticeChain& chain, int k, int N, const Point& gamma) {
  require_order(N);
  const GroupSpec& g = chain.group();
  const Domain& Q = chain.level(k).Q;
  Complex integral = 1.0;
  if (g.discrete()) {
    const auto* iv = Q.as<IntegerInterval>();
    require(iv != nullptr, ErrorKind::Unsupported, "B-spline on " + g.name() + " needs an interval Q_k");
    double u = gamma.at(0);
    if (g.finite()) u /= static_cast<double>(g.modulus());
    integral = dirichlet(iv->hi - iv->lo + 1, u) * unit_turns(-frac_mul(static_cast<double>(iv->lo), u));
  } else {
    auto box = as_box(Q, g);
    require(box.has_value(), ErrorKind::Unsupported, "B-spline on " + g.name() + " needs a box Q_k");
    for (std::size_t r = 0; r < box->lo.size(); ++r)
      integral *= box_integral(to_double(box->hi[r] - box->lo[r]), gamma.at(r)) *
                  unit_turns(-frac_mul(to_double(box->lo[r]), gamma[r]));
  }
  return std::pow(to_double(chain.measure_Q(k)), 0.5 - N) * std::pow(integral, N);
}

PeriodicFilter h_filter(const LatticeChain& chain, int k, int N) {
  require_order(N);
  require(N <= 30, ErrorKind::Domain, "B-spline order too large");
  return trig_filter(chain, k, binomial_row(N), Rational(1, std::int64_t{1} << (2 * N - 1)));
}

PeriodicFilter g_filter_order1(const LatticeChain& chain, int k) { return trig_filter(chain, k, {1, -1}, Rational(1, 2)); }

std::vector<PeriodicFilter> g_filters_even(const LatticeChain& chain, int k, int M_half) {
  require(M_half >= 1, ErrorKind::Domain, "even-order wavelet filters need M >= 1");
  require(M_half <= 15, ErrorKind::Domain, "B-spline order too large");
  const int n = 2 * M_half;
  const auto c = binomial_row(n);
  std::vector<PeriodicFilter> out;
  for (int m = 1; m <= n; ++m)
    out.push_back(trig_filter(chain, k, binomial_product(n - m, m),
                              Rational(c[static_cast<std::size_t>(m)], std::int64_t{1} << (2 * n - 1))));
  return out;
}

std::vector<PeriodicFilter> bspline_wavelet_filters(const LatticeChain& chain, int k, int N) {
  require_order(N);
  if (N == 1) return {g_filter_order1(chain, k)};
  require(N % 2 == 0, ErrorKind::Unsupported,
          "no wavelet filters for odd B-spline order " + std::to_string(N) + " (only N = 1 and even N)");
  return g_filters_even(chain, k, N / 2);
}

std::optional<ExactPoint> splitting_violation(const LatticeChain& chain, int k) {
  const GroupSpec& g = chain.group();
  const Domain& Qk = chain.level(k).Q;
  const Domain& Qn = chain.level(k + 1).Q;
  const ExactPoint eta = chain.eta(k);
  if (is_enumerable(Qk, g)) {
    auto lower = enumerate(Qn, g);
    std::vector<ExactPoint> both = lower;
    for (const auto& p : lower) both.push_back(g.reduce(add(p, eta)));
    std::sort(both.begin(), both.end());
    auto target = enumerate(Qk, g);
    for (std::size_t i = 0; i + 1 < both.size(); ++i)
      if (both[i] == both[i + 1]) return both[i];
    for (const auto& p : both)
      if (!std::binary_search(target.begin(), target.end(), p)) return p;
    for (const auto& p : target)
      if (!std::binary_search(both.begin(), both.end(), p)) return p;
    return std::nullopt;
  }
  Domain split = Domain::coset_union(Qn, {ExactPoint(eta.size(), Rational(0)), eta});
  if (same_set(split, Qk, g)) return std::nullopt;
  return eta;
}

Domain refinement_domain(const LatticeChain& chain, int k) {
  const GroupSpec dual = chain.dual_group();
  if (dual.compact()) return WholeGroup{};
  const Domain& V = chain.level(k + 1).V;
  if (auto iv = V.as<IntegerInterval>()) return IntegerInterval{2 * iv->lo, 2 * iv->hi + 1};
  HalfOpenBox b = bounding_box(V, dual);
  for (auto& c : b.lo) c *= 2;
  for (auto& c : b.hi) c *= 2;
  return b;
}

VerificationReport refinement_residual(const LatticeChain& chain, int k, int N, const SamplingPlan& plan) {
  require_order(N);
  if (auto w = splitting_violation(chain, k)) {
    std::string where;
    for (const auto& c : *w) where += (where.empty() ? "" : ", ") + to_string(c);
    fail(ErrorKind::Construction, "splitting Q_k = Q_{k+1} u (eta_k + Q_{k+1}) fails at (" + where + ")");
  }
  const PeriodicFilter H = h_filter(chain, k, N);
  const BSplineGenerator fine(chain, k + 1, N);
  const BSplineGenerator coarse(chain, k, N);
  const Domain dom = refinement_domain(chain, k);
  const auto pts = sample_domain(dom, chain.dual_group(), plan);
  VerificationReport rep;
  rep.exhaustive = samples_exhaustively(dom, chain.dual_group(), plan);
  rep.samples = pts.size();
  rep.worst_point = pts.front();
  for (const auto& g : pts) {
    double r = std::abs(coarse.hat(g) - H(g) * fine.hat(g));
    if (r > rep.max_residual || std::isnan(r)) {
      rep.max_residual = r;
      rep.worst_point = g;
    }
  }
  return rep;
}

Generator wavelet_time(const LatticeChain& chain, int k, const PeriodicFilter& filter, int N) {
  const auto* poly = filter.trig();
  require(poly != nullptr, ErrorKind::VariantMismatch, "time-domain wavelets need a trig filter");
  require(chain.level(k + 1).lattice.contains(poly->eta), ErrorKind::Lattice,
          "filter step is not in Lambda_" + std::to_string(k + 1));
  const BSplineGenerator phi(chain, k + 1, N);
  const Mask mask = mask_coefficients(filter);
  Generator out;
  out.level = k;
  out.name = "Psi_" + std::to_string(k);
  auto fine = std::make_shared<const BSplineGenerator>(phi);
  auto f = std::make_shared<const PeriodicFilter>(filter);
  out.spectrum = [fine, f](const Point& gamma) { return (*f)(gamma) * fine->hat(gamma); };
  if (phi.samples()) {
    const Sequence& s = *phi.samples();
    const auto eta = static_cast<std::int64_t>(mask.eta[0].numerator());
    const auto [lo, hi] = std::minmax_element(mask.shifts.begin(), mask.shifts.end());
    if (chain.group().finite()) {
      const std::int64_t n = chain.group().modulus();
      Sequence w{0, std::vector<Complex>(static_cast<std::size_t>(n))};
      for (std::size_t j = 0; j < mask.coeffs.size(); ++j)
        for (std::int64_t x = 0; x < n; ++x) {
          std::int64_t y = (((x - mask.shifts[j] * eta) % n) + n) % n;
          w.values[static_cast<std::size_t>(x)] += mask.coeffs[j] * s.at(y);
        }
      out.time = std::move(w);
    } else {
      Sequence w{s.start + *lo * eta, {}};
      w.values.assign(s.values.size() + static_cast<std::size_t>((*hi - *lo) * eta), Complex(0));
      for (std::size_t j = 0; j < mask.coeffs.size(); ++j)
        for (std::int64_t x = s.start; x < s.end(); ++x) {
          std::int64_t y = x + mask.shifts[j] * eta;
          w.values[static_cast<std::size_t>(y - w.start)] += mask.coeffs[j] * s.at(x);
        }
      out.time = std::move(w);
    }
  }
  out.time_eval = [fine, mask](const Point& x) {
    double v = 0.0;
    for (std::size_t j = 0; j < mask.coeffs.size(); ++j) {
      Point y = x;
      for (std::size_t r = 0; r < y.size(); ++r) y[r] -= static_cast<double>(mask.shifts[j]) * to_double(mask.eta[r]);
      v += mask.coeffs[j].real() * (*fine)(y);
    }
    return v;
  };
  return out;
}

double decay_hypothesis_value(const LatticeChain& chain, int k, const Point& gamma) {
  const GroupSpec& g = chain.group();
  const Domain& Q = chain.level(k).Q;
  if (is_enumerable(Q, g)) {
    double worst = 0.0;
    for (const auto& x : enumerate(Q, g)) worst = std::max(worst, std::abs(character(g, to_point(negated(x)), gamma) - 1.0));
    return worst;
  }
  auto box = as_box(Q, g);
  require(box.has_value(), ErrorKind::Unsupported, "decay hypothesis needs a box Q_k");
  double lo = 0.0, hi = 0.0;
  for (std::size_t r = 0; r < box->lo.size(); ++r) {
    double a = to_double(box->lo[r]) * gamma[r];
    double b = to_double(box->hi[r]) * gamma[r];
    lo += std::min(a, b);
    hi += std::max(a, b);
  }
  // |e^{-2 pi i t} - 1| = 2 |sin(pi t)|, maximal at half-integers
  if (std::ceil(lo - 0.5) + 0.5 <= hi) return 2.0;
  return std::max(2.0 * std::fabs(sin_pi_mul(1.0, lo)), 2.0 * std::fabs(sin_pi_mul(1.0, hi)));
}

DecayCheck decay_bound_check(const LatticeChain& chain, int k, int N, double delta, const std::vector<Point>& S) {
  require(delta > 0.0 && delta < 1.0, ErrorKind::Domain, "delta must lie in (0, 1)");
  require_order(N);
  const BSplineGenerator phi(chain, k, N);
  const double muV = to_double(chain.measure_V(k));
  const double bound = 1.0 - std::pow(1.0 - delta, 2 * N);
  DecayCheck out;
  out.worst_slack = bound;
  for (const auto& gamma : S) {
    if (decay_hypothesis_value(chain, k, gamma) > delta) continue;
    out.hypothesis_points.push_back(gamma);
    double lhs = std::fabs(muV * std::norm(phi.hat(gamma)) - 1.0);
    out.worst_slack = std::min(out.worst_slack, bound - lhs);
    if (lhs > bound + 1e-12) out.holds = false;
  }
  return out;
}

}  // namespace lcaframe
