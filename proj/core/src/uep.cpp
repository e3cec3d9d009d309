#include "lcaframe/uep.hpp"

#include "lcaframe/error.hpp"

#include <cmath>

namespace lcaframe {

UepMatrix::UepMatrix(int level, std::vector<ExactPoint> nu, std::vector<PeriodicFilter> rows, Domain V,
                     Lattice coarse_annihilator)
    : level_(level), nu_(std::move(nu)), rows_(std::move(rows)), V_(std::move(V)),
      coarse_annihilator_(std::move(coarse_annihilator)) {
  require(rows_.size() >= 2, ErrorKind::Construction, "UEP matrix needs H and at least one wavelet filter");
  require(!nu_.empty(), ErrorKind::Construction, "UEP matrix needs coset representatives");
  for (const auto& f : rows_) gain_sq_.push_back(to_double(f.gain_sq()));
}

std::vector<std::vector<Complex>> UepMatrix::base_values(const Point& gamma) const {
  std::vector<std::vector<Complex>> out(rows_.size(), std::vector<Complex>(nu_.size()));
  for (std::size_t l = 0; l < nu_.size(); ++l) {
    Point g = gamma;
    for (std::size_t r = 0; r < g.size(); ++r) g[r] += to_double(nu_[l][r]);
    for (std::size_t m = 0; m < rows_.size(); ++m) out[m][l] = rows_[m].base(g);
  }
  return out;
}

std::vector<std::vector<Complex>> UepMatrix::evaluate(const Point& gamma) const {
  auto b = base_values(gamma);
  for (std::size_t m = 0; m < b.size(); ++m)
    for (auto& v : b[m]) v *= rows_[m].gain();
  return b;
}

Complex UepMatrix::entry_residual(const Point& gamma, std::size_t l, std::size_t lp) const {
  require(l < nu_.size() && lp < nu_.size(), ErrorKind::Index, "UEP matrix column out of range");
  auto P = evaluate(gamma);
  Complex s = 0;
  for (const auto& row : P) s += row[l] * std::conj(row[lp]);
  if (l == lp) s -= static_cast<double>(index());
  return s;
}

double UepMatrix::residual(const Point& gamma) const {
  const auto b = base_values(gamma);
  const std::size_t d = nu_.size();
  const double dd = static_cast<double>(d);
  double worst = 0.0;
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t lp = l; lp < d; ++lp) {
      Complex s = 0;
      for (std::size_t m = 0; m < b.size(); ++m) s += gain_sq_[m] * (b[m][l] * std::conj(b[m][lp]));
      if (l == lp) s -= dd;
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

UepMatrix assemble_P(const LatticeChain& chain, int k, const PeriodicFilter& H, const std::vector<PeriodicFilter>& G) {
  require(chain.has_level(k + 1), ErrorKind::Index, "level " + std::to_string(k + 1) + " outside I");
  require(!G.empty(), ErrorKind::Construction, "at least one wavelet filter is required");
  const Lattice& periodic = chain.level(k + 1).annihilator;
  std::vector<PeriodicFilter> rows{H};
  rows.insert(rows.end(), G.begin(), G.end());
  for (const auto& f : rows)
    require(f.periodicity() == periodic, ErrorKind::Construction,
            "filter periodicity differs from Lambda_" + std::to_string(k + 1) + "^perp");
  return UepMatrix(k, chain.nu(k), std::move(rows), chain.level(k).V, chain.level(k).annihilator);
}

VerificationReport verify_uep_matrix(const UepMatrix& P, const SamplingPlan& plan) {
  const auto pts = sample_domain(P.domain(), P.dual_group(), plan);
  VerificationReport rep;
  rep.exhaustive = samples_exhaustively(P.domain(), P.dual_group(), plan);
  rep.samples = pts.size();
  rep.worst_point = pts.front();
  for (const auto& g : pts) {
    double r = P.residual(g);
    if (r > rep.max_residual || std::isnan(r)) {
      rep.max_residual = r;
      rep.worst_point = g;
    }
  }
  return rep;
}

bool verify_periodic_extension(const UepMatrix& P, const std::vector<ExactPoint>& shifts, const SamplingPlan& plan,
                               double tol) {
  for (const auto& s : shifts)
    require(P.coarse_annihilator().contains(s), ErrorKind::Domain, "shift is not in Lambda_k^perp");
  const auto pts = sample_domain(P.domain(), P.dual_group(), plan);
  for (const auto& s : shifts) {
    Point sp = to_point(s);
    for (const auto& g : pts) {
      Point h = g;
      for (std::size_t r = 0; r < h.size(); ++r) h[r] += sp[r];
      if (std::fabs(P.residual(g) - P.residual(h)) > tol) return false;
    }
  }
  return true;
}

}  // namespace lcaframe
