#include "lcaframe/certify.hpp"

#include "lcaframe/analysis.hpp"
#include "lcaframe/bspline.hpp"
#include "lcaframe/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lcaframe {

namespace {

constexpr const char* kOutOfScope = "out of desk-scale scope";
// the quadrature side of the fiber check on Z costs O(|supp phi|^2) per trial
constexpr int kFiberTrialsOnIntegers = 10;

std::string level_scope(int k) { return "level " + std::to_string(k); }

CheckResult judged(CheckResult r) {
  r.status = r.residual <= r.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult skipped(const std::string& suite, const std::string& condition, const std::string& note) {
  CheckResult r;
  r.suite = suite;
  r.condition = condition;
  r.scope = "system";
  r.status = CheckStatus::Skip;
  r.note = note;
  return r;
}

std::string certification(const Domain& d, const GroupSpec& g, const SamplingPlan& plan) {
  return samples_exhaustively(d, g, plan) ? "exact" : "certified on sampled set";
}

void uep_suite(const FrameSystem& sys, const CertifyOptions& o, CertifyReport& out) {
  for (int k = sys.k0(); k < sys.k1(); ++k) {
    auto P = sys.uep_matrix(k);
    auto rep = verify_uep_matrix(P, o.plan);
    CheckResult r;
    r.suite = "uep";
    r.condition = "uep-matrix-condition";
    r.scope = level_scope(k);
    r.residual = rep.max_residual;
    r.tolerance = o.tolerance;
    r.samples = rep.samples;
    r.certification = rep.certification();
    r = judged(r);
    if (r.status == CheckStatus::Fail) {
      r.note = "worst gamma =";
      for (double x : rep.worst_point) r.note += " " + std::to_string(x);
    }
    out.checks.push_back(r);
  }
}

void refinement_suite(const FrameSystem& sys, const CertifyOptions& o, CertifyReport& out) {
  const LatticeChain& chain = sys.chain();
  const GroupSpec dual = chain.dual_group();
  for (int k = sys.k0(); k < sys.k1(); ++k) {
    Domain where = refinement_domain(chain, k);
    auto pts = sample_domain(where, dual, o.plan);
    auto coarse = sys.scaling(k).generator;
    auto fine = sys.scaling(k + 1).generator;
    const PeriodicFilter& H = sys.filters_at(k).H;
    CheckResult r;
    r.suite = "refinement";
    r.condition = "refinement-equation";
    r.scope = level_scope(k);
    for (const auto& g : pts) r.residual = std::max(r.residual, std::abs(coarse.spectrum(g) - H(g) * fine.spectrum(g)));
    r.tolerance = o.tolerance;
    r.samples = pts.size();
    r.certification = certification(where, dual, o.plan);
    out.checks.push_back(judged(r));
  }
}

Sequence spectrum_on(const Generator& g, std::int64_t lo, std::int64_t hi) {
  Sequence s{lo, {}};
  for (std::int64_t x = lo; x <= hi; ++x) s.values.push_back(g.spectrum({static_cast<double>(x)}));
  return s;
}

// F on the dual as a finitely supported sequence.
Sequence dual_side(const FrameSystem& sys, const TestFunction& f) {
  const GroupSpec& g = sys.chain().group();
  if (f.side == FunctionSide::Frequency || !g.finite()) return f.values;
  const std::int64_t n = g.modulus();
  Sequence F{0, std::vector<Complex>(static_cast<std::size_t>(n))};
  for (std::int64_t gam = 0; gam < n; ++gam)
    for (std::int64_t x = f.values.start; x < f.values.end(); ++x)
      F.values[static_cast<std::size_t>(gam)] +=
          f.values.at(x) * character(g, Point{static_cast<double>(-x)}, Point{static_cast<double>(gam)});
  return F;
}

void fiber_suite(const FrameSystem& sys, const CertifyOptions& o, CertifyReport& out) {
  if (sys.side() == AnalysisSide::Unsupported) {
    out.checks.push_back(skipped("fiber", "fiberization", kOutOfScope));
    return;
  }
  const GroupSpec& g = sys.chain().group();
  const int trials = g.kind() == GroupKind::Integers ? std::min(o.trials, kFiberTrialsOnIntegers) : o.trials;
  std::mt19937_64 rng(o.seed);
  for (int k = sys.k0(); k <= sys.k1(); ++k) {
    const ChainLevel& L = sys.chain().level(k);
    auto phi = sys.scaling(k).generator;
    Sequence Phi;
    if (g.kind() == GroupKind::Integers) {
      Phi = *phi.time;
    } else if (g.finite()) {
      Phi = spectrum_on(phi, 0, g.modulus() - 1);
    } else {
      const auto* v = L.V.as<IntegerInterval>();
      Phi = spectrum_on(phi, v->lo, v->hi);
    }
    CheckResult r;
    r.suite = "fiber";
    r.condition = "fiberization";
    r.scope = level_scope(k);
    r.tolerance = o.tolerance;
    for (int t = 0; t < trials; ++t) {
      auto f = random_test_function(sys, rng);
      auto [lhs, rhs] = fiberization_both_sides(L.lattice, L.V, dual_side(sys, f), Phi);
      r.residual = std::max(r.residual, std::fabs(lhs - rhs) / (1.0 + lhs));
    }
    r.samples = static_cast<std::size_t>(trials);
    r.certification = g.kind() == GroupKind::Integers ? "exact quadrature" : "exact finite sums";
    r.note = "relative |lhs - rhs| / (1 + lhs) over seeded random F";
    out.checks.push_back(judged(r));
  }
}

void telescope_suite(const FrameSystem& sys, const CertifyOptions& o, CertifyReport& out) {
  if (sys.side() == AnalysisSide::Unsupported) {
    out.checks.push_back(skipped("telescope", "telescoping", kOutOfScope));
    return;
  }
  std::mt19937_64 rng(o.seed);
  for (int k = sys.k0(); k < sys.k1(); ++k) {
    CheckResult r;
    r.suite = "telescope";
    r.condition = "telescoping";
    r.scope = level_scope(k);
    r.tolerance = o.tolerance;
    auto uep = verify_uep_matrix(sys.uep_matrix(k), o.plan);
    if (uep.max_residual > o.tolerance) {
      r.residual = uep.max_residual;
      r.status = CheckStatus::Fail;
      r.note = "precondition: uep matrix condition not certified at this level";
      out.checks.push_back(r);
      continue;
    }
    for (int t = 0; t < o.trials; ++t) {
      auto f = random_test_function(sys, rng);
      r.residual = std::max(r.residual, telescoping_residual(sys, k, f) / norm_sq(sys, f));
    }
    r.samples = static_cast<std::size_t>(o.trials);
    r.certification = "exact finite sums";
    r.note = "relative to |F|^2 over seeded random F";
    out.checks.push_back(judged(r));
  }
}

void parseval_suite(const FrameSystem& sys, const CertifyOptions& o, CertifyReport& out) {
  if (sys.side() == AnalysisSide::Unsupported) {
    out.checks.push_back(skipped("parseval", "parseval", kOutOfScope));
  } else {
    std::mt19937_64 rng(o.seed);
    CheckResult r;
    r.suite = "parseval";
    r.condition = "parseval";
    r.scope = "random test functions";
    r.tolerance = o.tolerance;
    for (int t = 0; t < o.trials; ++t) {
      auto f = random_test_function(sys, rng);
      r.residual = std::max(r.residual, parseval_residual(sys, f));
    }
    r.samples = static_cast<std::size_t>(o.trials);
    r.certification = "exact finite sums";
    out.checks.push_back(judged(r));
    const GroupSpec& g = sys.chain().group();
    if (g.finite()) {
      auto S = frame_operator(sys);
      CheckResult m;
      m.suite = "parseval";
      m.condition = "parseval";
      m.scope = "frame operator";
      m.residual = (S - Eigen::MatrixXcd::Identity(S.rows(), S.cols())).cwiseAbs().maxCoeff();
      m.tolerance = o.tolerance;
      m.samples = static_cast<std::size_t>(S.rows());
      m.certification = "exact";
      m.note = "max entry of S - I";
      out.checks.push_back(judged(m));
    }
  }
  out.checks.push_back(asymptotic_normalization(sys, o));
  out.checks.push_back(translate_disjointness(sys));
}

// The compact set S exhausted at the top level.
Domain exhaustion_set(const FrameSystem& sys) {
  if (sys.omega()) return sys.omega()->omega(sys.k1());
  return sys.chain().level(sys.k1()).V;
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "uep") return Suite::Uep;
  if (name == "refinement") return Suite::Refinement;
  if (name == "fiber") return Suite::Fiber;
  if (name == "telescope") return Suite::Telescope;
  if (name == "parseval") return Suite::Parseval;
  if (name == "all") return Suite::All;
  fail(ErrorKind::Schema, "unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Uep: return "uep";
    case Suite::Refinement: return "refinement";
    case Suite::Fiber: return "fiber";
    case Suite::Telescope: return "telescope";
    case Suite::Parseval: return "parseval";
    case Suite::All: return "all";
  }
  return "?";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

bool CertifyReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t CertifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

CheckResult asymptotic_normalization(const FrameSystem& sys, const CertifyOptions& o) {
  const LatticeChain& chain = sys.chain();
  const GroupSpec dual = chain.dual_group();
  const int K = sys.k1();
  CheckResult r;
  r.suite = "parseval";
  r.condition = "asymptotic-normalization";
  r.scope = level_scope(K);
  r.tolerance = o.tolerance;
  const ChainLevel& L = chain.level(K);
  const bool point_Q = is_enumerable(L.Q, chain.group()) && enumerate(L.Q, chain.group()).size() == 1;
  if (sys.family().kind == FamilyKind::BSpline && !point_Q) {
    auto pts = sample_domain(L.V, dual, o.plan);
    auto dc = decay_bound_check(chain, K, sys.family().order, 0.5, pts);
    r.residual = std::max(0.0, -dc.worst_slack);
    r.tolerance = 0.0;
    r.samples = dc.hypothesis_points.size();
    r.certification = certification(L.V, dual, o.plan);
    r.note = "decay bound with delta = 0.5 on the points where its hypothesis holds";
    return judged(r);
  }
  Domain S = exhaustion_set(sys);
  auto pts = sample_domain(S, dual, o.plan);
  auto phi = sys.scaling(K).generator;
  const double mu = measure_value(L.V, dual, true);
  for (const auto& g : pts) r.residual = std::max(r.residual, std::fabs(mu * std::norm(phi.spectrum(g)) - 1.0));
  r.samples = pts.size();
  r.certification = certification(S, dual, o.plan);
  r.note = "epsilon = 0 expected";
  return judged(r);
}

CheckResult translate_disjointness(const FrameSystem& sys) {
  const LatticeChain& chain = sys.chain();
  const GroupSpec dual = chain.dual_group();
  const ChainLevel& L = chain.level(sys.k1());
  Domain S = exhaustion_set(sys);
  CheckResult r;
  r.suite = "parseval";
  r.condition = "translate-disjointness";
  r.scope = level_scope(sys.k1());
  r.tolerance = 0.0;
  r.certification = "exact";
  if (is_enumerable(S, dual)) {
    const auto& steps = L.annihilator.steps();
    std::set<ExactPoint> seen;
    auto pts = enumerate(S, dual);
    for (const auto& p : pts) {
      ExactPoint q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = mod(p[i], steps[i]);
      if (!seen.insert(q).second) r.residual += 1.0;
    }
    r.samples = pts.size();
    r.note = "points of S sharing a coset of the top annihilator";
  } else {
    r.residual = is_subset(S, L.V, dual) ? 0.0 : 1.0;
    r.samples = 1;
    r.note = "S inside V at the top level";
  }
  return judged(r);
}

CertifyReport certify(const FrameSystem& system, Suite suite, const CertifyOptions& opts) {
  require(opts.trials >= 1, ErrorKind::Domain, "trials must be positive");
  require(!opts.plan.empty(), ErrorKind::Domain, "empty sampling plan");
  CertifyReport out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Uep) uep_suite(system, opts, out);
  if (all || suite == Suite::Refinement) refinement_suite(system, opts, out);
  if (all || suite == Suite::Fiber) fiber_suite(system, opts, out);
  if (all || suite == Suite::Telescope) telescope_suite(system, opts, out);
  if (all || suite == Suite::Parseval) parseval_suite(system, opts, out);
  return out;
}

}  // namespace lcaframe
