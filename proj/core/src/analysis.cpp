#include "lcaframe/analysis.hpp"

#include "lcaframe/error.hpp"

#include <algorithm>
#include <cmath>

namespace lcaframe {

namespace {

// Test function seen from the dual: values F at finitely many frequencies.
struct Spectral {
  GroupSpec group = GroupSpec::integers();  // the group G the modulations act from
  std::vector<Point> gammas;
  std::vector<Complex> F;
  double weight = 1.0;  // Haar mass of a dual point
};

std::int64_t wrap(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

AnalysisSide require_side(const FrameSystem& system) {
  AnalysisSide side = system.side();
  require(side != AnalysisSide::Unsupported, ErrorKind::Unsupported,
          "inner products on " + system.chain().group().name() + " for " + family_name(system.family()) +
              " are out of desk-scale scope (matrix condition only)");
  return side;
}

Spectral spectral(const FrameSystem& system, const TestFunction& f) {
  const GroupSpec& g = system.chain().group();
  Spectral s;
  s.group = g;
  if (g.finite()) {
    const std::int64_t n = g.modulus();
    s.weight = 1.0 / static_cast<double>(n);
    std::vector<Complex> F(static_cast<std::size_t>(n));
    if (f.side == FunctionSide::Frequency) {
      for (std::int64_t x = f.values.start; x < f.values.end(); ++x) F[static_cast<std::size_t>(wrap(x, n))] += f.values.at(x);
    } else {
      for (std::int64_t gam = 0; gam < n; ++gam) {
        Complex acc = 0;
        for (std::int64_t x = f.values.start; x < f.values.end(); ++x)
          acc += f.values.at(x) * character(g, Point{static_cast<double>(-x)}, Point{static_cast<double>(gam)});
        F[static_cast<std::size_t>(gam)] = acc;
      }
    }
    for (std::int64_t gam = 0; gam < n; ++gam) {
      s.gammas.push_back({static_cast<double>(gam)});
      s.F.push_back(F[static_cast<std::size_t>(gam)]);
    }
    return s;
  }
  require(f.side == FunctionSide::Frequency, ErrorKind::Unsupported,
          "test functions on " + g.name() + " systems must be given on the dual");
  for (std::int64_t x = f.values.start; x < f.values.end(); ++x) {
    s.gammas.push_back({static_cast<double>(x)});
    s.F.push_back(f.values.at(x));
  }
  return s;
}

std::vector<ExactPoint> all_points(const Lattice& lat) {
  return lat.points_in(WholeGroup{});
}

template <class Sink>
void modulation_coefficients(const Spectral& s, const SystemElement& e, Sink&& sink) {
  std::vector<Complex> p(s.gammas.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = s.F[i] * std::conj(e.generator.spectrum(s.gammas[i])) * s.weight;
  for (const auto& lam : all_points(e.lattice)) {
    Point l = to_point(lam);
    Complex c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != Complex(0)) c += p[i] * std::conj(character(s.group, l, s.gammas[i]));
    sink(lam, c);
  }
}

template <class Sink>
void translation_coefficients(const Sequence& f, const SystemElement& e, Sink&& sink) {
  require(e.generator.time.has_value(), ErrorKind::Unsupported, e.generator.name + " has no time-domain values");
  const Sequence& g = *e.generator.time;
  if (f.empty() || g.empty()) return;
  const std::int64_t a = e.lattice.steps()[0].numerator();
  const std::int64_t ylo = f.start - g.end() + 1;
  const std::int64_t yhi = f.end() - 1 - g.start;
  std::int64_t y = ylo >= 0 ? ((ylo + a - 1) / a) * a : -((-ylo) / a) * a;
  for (; y <= yhi; y += a) {
    Complex c = 0;
    const std::int64_t xlo = std::max(f.start, g.start + y);
    const std::int64_t xhi = std::min(f.end(), g.end() + y);
    for (std::int64_t x = xlo; x < xhi; ++x) c += f.at(x) * std::conj(g.at(x - y));
    sink(ExactPoint{Rational(y)}, c);
  }
}

template <class Sink>
void coefficients(const FrameSystem& system, const SystemElement& e, const TestFunction& f, const Spectral* s,
                  Sink&& sink) {
  if (system.side() == AnalysisSide::Translation) {
    require(f.side == FunctionSide::Time, ErrorKind::Unsupported, "translation-side analysis needs a time-domain test function");
    translation_coefficients(f.values, e, sink);
  } else {
    modulation_coefficients(*s, e, sink);
  }
}

double energy_of(const FrameSystem& system, const SystemElement& e, const TestFunction& f, const Spectral* s) {
  double total = 0.0;
  coefficients(system, e, f, s, [&](const ExactPoint&, Complex c) { total += std::norm(c); });
  return total;
}

std::optional<Spectral> prepare(const FrameSystem& system, const TestFunction& f) {
  if (require_side(system) == AnalysisSide::Modulation) return spectral(system, f);
  return std::nullopt;
}

// F(gamma) = sum_x f(x) e^{-2 pi i x gamma} by Horner in z = e^{-2 pi i gamma}.
Complex evaluate_series(const Sequence& f, double gamma) {
  if (f.empty()) return 0;
  const Complex z = unit_turns(-gamma);
  Complex acc = 0;
  for (std::size_t i = f.values.size(); i-- > 0;) acc = acc * z + f.values[i];
  return acc * unit_turns(-frac_mul(static_cast<double>(f.start), gamma));
}

}  // namespace

double norm_sq(const FrameSystem& system, const TestFunction& f) {
  const GroupSpec& g = system.chain().group();
  double s = f.values.norm_sq();
  if (g.finite() && f.side == FunctionSide::Frequency) s /= static_cast<double>(g.modulus());
  return s;
}

std::vector<Coefficient> analysis(const FrameSystem& system, const TestFunction& f) {
  auto s = prepare(system, f);
  std::vector<Coefficient> out;
  const auto& elems = system.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    coefficients(system, elems[i], f, s ? &*s : nullptr, [&](const ExactPoint& lam, Complex c) {
      if (c != Complex(0)) out.push_back({i, lam, c});
    });
  }
  std::stable_sort(out.begin(), out.end(), [](const Coefficient& a, const Coefficient& b) {
    return a.element != b.element ? a.element < b.element : a.lambda < b.lambda;
  });
  return out;
}

double parseval_residual(const FrameSystem& system, const TestFunction& f) {
  const double n2 = norm_sq(system, f);
  require(n2 > 0.0, ErrorKind::Domain, "Parseval residual needs a nonzero test function");
  auto s = prepare(system, f);
  double total = 0.0;
  for (const auto& e : system.elements()) total += energy_of(system, e, f, s ? &*s : nullptr);
  return std::fabs(total - n2) / n2;
}

double element_energy(const FrameSystem& system, const SystemElement& element, const TestFunction& f) {
  auto s = prepare(system, f);
  return energy_of(system, element, f, s ? &*s : nullptr);
}

double level_energy(const FrameSystem& system, int k, const TestFunction& f) {
  return element_energy(system, system.scaling(k), f);
}

Eigen::MatrixXcd system_vectors(const FrameSystem& system) {
  const GroupSpec& g = system.chain().group();
  require(g.finite(), ErrorKind::Unsupported, "frame operator needs a finite group, not " + g.name());
  const std::int64_t n = g.modulus();
  require(n <= 4096, ErrorKind::Resource, "frame operator limited to groups of order <= 4096");
  std::vector<std::vector<Complex>> cols;
  const double sw = std::sqrt(1.0 / static_cast<double>(n));
  for (const auto& e : system.elements()) {
    std::vector<Complex> spec(static_cast<std::size_t>(n));
    for (std::int64_t gam = 0; gam < n; ++gam) spec[static_cast<std::size_t>(gam)] = e.generator.spectrum({static_cast<double>(gam)});
    for (const auto& lam : all_points(e.lattice)) {
      Point l = to_point(lam);
      std::vector<Complex> u(static_cast<std::size_t>(n));
      for (std::int64_t gam = 0; gam < n; ++gam)
        u[static_cast<std::size_t>(gam)] =
            character(g, l, {static_cast<double>(gam)}) * spec[static_cast<std::size_t>(gam)] * sw;
      cols.push_back(std::move(u));
    }
  }
  Eigen::MatrixXcd U(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::int64_t r = 0; r < n; ++r) U(r, static_cast<Eigen::Index>(c)) = cols[c][static_cast<std::size_t>(r)];
  return U;
}

Eigen::MatrixXcd frame_operator(const FrameSystem& system) {
  Eigen::MatrixXcd U = system_vectors(system);
  return U * U.adjoint();
}

std::pair<double, double> fiberization_both_sides(const Lattice& Lambda, const Domain& V, const Sequence& F,
                                                  const Sequence& Phi) {
  const GroupSpec& g = Lambda.group();
  const Lattice perp = Lambda.annihilator();
  const GroupSpec dual = perp.group();
  switch (g.kind()) {
    case GroupKind::FiniteCyclic: {
      const std::int64_t n = g.modulus();
      const double w = 1.0 / static_cast<double>(n);
      auto at = [n](const Sequence& s, std::int64_t x) {
        Complex v = 0;
        for (std::int64_t y = s.start; y < s.end(); ++y)
          if (wrap(y, n) == wrap(x, n)) v += s.at(y);
        return v;
      };
      std::vector<Complex> p(static_cast<std::size_t>(n));
      for (std::int64_t gam = 0; gam < n; ++gam) p[static_cast<std::size_t>(gam)] = at(F, gam) * std::conj(at(Phi, gam));
      double lhs = 0.0;
      for (const auto& lam : all_points(Lambda)) {
        Complex c = 0;
        for (std::int64_t gam = 0; gam < n; ++gam)
          c += p[static_cast<std::size_t>(gam)] * std::conj(character(g, to_point(lam), {static_cast<double>(gam)})) * w;
        lhs += std::norm(c);
      }
      const auto omegas = all_points(perp);
      const auto vs = enumerate(V, dual);
      double rhs = 0.0;
      for (const auto& v : vs) {
        Complex fiber = 0;
        for (const auto& om : omegas)
          fiber += p[static_cast<std::size_t>(wrap((v[0] + om[0]).numerator(), n))];
        rhs += w * std::norm(fiber);
      }
      return {lhs, to_double(*measure(V, dual, true)) * rhs};
    }
    case GroupKind::Torus: {
      // the dual is Z and F, Phi are finitely supported there
      std::int64_t lo = std::max(F.start, Phi.start), hi = std::min(F.end(), Phi.end());
      double lhs = 0.0;
      for (const auto& lam : all_points(Lambda)) {
        Complex c = 0;
        for (std::int64_t gam = lo; gam < hi; ++gam)
          c += F.at(gam) * std::conj(Phi.at(gam)) * std::conj(character(g, to_point(lam), {static_cast<double>(gam)}));
        lhs += std::norm(c);
      }
      const std::int64_t step = perp.steps()[0].numerator();
      double rhs = 0.0;
      for (const auto& v : enumerate(V, dual)) {
        const std::int64_t base = v[0].numerator();
        Complex fiber = 0;
        std::int64_t first = base + ((lo - base) >= 0 ? ((lo - base + step - 1) / step) * step : -((base - lo) / step) * step);
        for (std::int64_t gam = first; gam < hi; gam += step) fiber += F.at(gam) * std::conj(Phi.at(gam));
        rhs += std::norm(fiber);
      }
      return {lhs, to_double(*measure(V, dual, true)) * rhs};
    }
    case GroupKind::Integers: {
      const std::int64_t a = Lambda.steps()[0].numerator();
      double lhs = 0.0;
      if (!F.empty() && !Phi.empty()) {
        // <F, M_lambda Phi> = sum_x f(x) conj(phi(x + lambda))
        const std::int64_t llo = Phi.start - F.end() + 1, lhi = Phi.end() - 1 - F.start;
        std::int64_t lam = llo >= 0 ? ((llo + a - 1) / a) * a : -((-llo) / a) * a;
        for (; lam <= lhi; lam += a) {
          Complex c = 0;
          for (std::int64_t x = F.start; x < F.end(); ++x) c += F.at(x) * std::conj(Phi.at(x + lam));
          lhs += std::norm(c);
        }
      }
      auto box = bounding_box(V, dual);
      const double v0 = to_double(box.lo[0]);
      const double width = to_double(box.hi[0] - box.lo[0]);
      require(box.hi[0] - box.lo[0] == Rational(1, a), ErrorKind::Domain, "V must be a fundamental domain of Lambda^perp");
      const std::int64_t span = static_cast<std::int64_t>(F.values.size() + Phi.values.size());
      const std::int64_t nodes = span / a + 2;
      double rhs = 0.0;
      for (std::int64_t j = 0; j < nodes; ++j) {
        const double gam = v0 + width * static_cast<double>(j) / static_cast<double>(nodes);
        Complex fiber = 0;
        for (std::int64_t i = 0; i < a; ++i) {
          const double x = gam + static_cast<double>(i) / static_cast<double>(a);
          fiber += evaluate_series(F, x) * std::conj(evaluate_series(Phi, x));
        }
        rhs += std::norm(fiber) * width / static_cast<double>(nodes);
      }
      return {lhs, width * rhs};
    }
    case GroupKind::Euclidean:
      break;
  }
  fail(ErrorKind::Unsupported, "fiberization on " + g.name() + " needs infinite sums");
}

double telescoping_residual(const FrameSystem& system, int k, const TestFunction& f) {
  require(k >= system.k0() && k < system.k1(), ErrorKind::Index, "telescoping needs k0 <= k < k1");
  auto s = prepare(system, f);
  const Spectral* sp = s ? &*s : nullptr;
  double rhs = energy_of(system, system.scaling(k), f, sp);
  for (const auto& e : system.wavelets(k)) rhs += energy_of(system, e, f, sp);
  double lhs = energy_of(system, system.scaling(k + 1), f, sp);
  return std::fabs(lhs - rhs);
}

double telescoping_residual(const FrameSystem& system, int k, const TestFunction& f, const SamplingPlan& plan,
                            double uep_tolerance) {
  auto rep = verify_uep_matrix(system.uep_matrix(k), plan);
  require(rep.max_residual <= uep_tolerance, ErrorKind::Precondition,
          "UEP matrix condition not certified at level " + std::to_string(k));
  return telescoping_residual(system, k, f);
}

bool sandwich_bounds_check(const FrameSystem& system, const TestFunction& f, double eps, int K) {
  require(K >= system.k0() && K <= system.k1(), ErrorKind::Index, "K must lie in [k0, k1]");
  const double n2 = norm_sq(system, f);
  const double slack = 1e-12 * std::max(1.0, n2);
  for (int k : {K, system.k1()}) {
    double e = level_energy(system, k, f);
    if (e < (1.0 - eps) * n2 - slack || e > (1.0 + eps) * n2 + slack) return false;
  }
  return true;
}

TestFunction random_test_function(const FrameSystem& system, std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  AnalysisSide side = require_side(system);
  const GroupSpec& g = system.chain().group();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TestFunction f;
  if (g.finite()) {
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, g.modulus() - 1);
  }
  f.side = side == AnalysisSide::Translation || g.finite() ? FunctionSide::Time : FunctionSide::Frequency;
  f.values.start = lo;
  for (std::int64_t x = lo; x <= hi; ++x) {
    double re = unit(rng);
    double im = unit(rng);
    f.values.values.emplace_back(re, im);
  }
  return f;
}

TestFunction random_test_function(const FrameSystem& system, std::mt19937_64& rng) {
  const GroupSpec& g = system.chain().group();
  if (g.finite()) return random_test_function(system, rng, 0, g.modulus() - 1);
  if (g.kind() == GroupKind::Torus) {
    const Domain& top = system.omega() ? system.omega()->omega(system.k1()) : system.chain().level(system.k1()).V;
    const auto* iv = top.as<IntegerInterval>();
    require(iv != nullptr, ErrorKind::Unsupported, "no default window for this system");
    return random_test_function(system, rng, iv->lo, iv->hi);
  }
  return random_test_function(system, rng, 0, 20);
}

Sequence time_samples(const FrameSystem& system, const Generator& gen) {
  if (gen.time) return *gen.time;
  const GroupSpec& g = system.chain().group();
  require(g.finite(), ErrorKind::Unsupported, gen.name + " has no finite time-domain representation on " + g.name());
  const std::int64_t n = g.modulus();
  std::vector<Complex> spec(static_cast<std::size_t>(n));
  for (std::int64_t gam = 0; gam < n; ++gam) spec[static_cast<std::size_t>(gam)] = gen.spectrum({static_cast<double>(gam)});
  Sequence out{0, std::vector<Complex>(static_cast<std::size_t>(n))};
  for (std::int64_t x = 0; x < n; ++x) {
    Complex acc = 0;
    for (std::int64_t gam = 0; gam < n; ++gam)
      acc += spec[static_cast<std::size_t>(gam)] * character(g, {static_cast<double>(x)}, {static_cast<double>(gam)});
    out.values[static_cast<std::size_t>(x)] = acc / static_cast<double>(n);
  }
  return out;
}

}  // namespace lcaframe
