#pragma once

#include "lcaframe/chain.hpp"
#include "lcaframe/filter.hpp"
#include "lcaframe/sampling.hpp"

#include <string>
#include <vector>

namespace lcaframe {

// P_k: row 0 is H, rows 1..rho are the wavelet filters; column l evaluates at
// gamma + nu_{k,l}.
class UepMatrix {
 public:
  UepMatrix(int level, std::vector<ExactPoint> nu, std::vector<PeriodicFilter> rows, Domain V,
            Lattice coarse_annihilator);

  int level() const { return level_; }
  std::int64_t index() const { return static_cast<std::int64_t>(nu_.size()); }
  int rho() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<ExactPoint>& nu() const { return nu_; }
  const std::vector<PeriodicFilter>& rows() const { return rows_; }
  const Domain& domain() const { return V_; }
  const GroupSpec& dual_group() const { return coarse_annihilator_.group(); }
  const Lattice& coarse_annihilator() const { return coarse_annihilator_; }

  std::vector<std::vector<Complex>> evaluate(const Point& gamma) const;
  // max |(P* P - d I)_{l l'}|.
  double residual(const Point& gamma) const;
  // sum_m P_{m l} conj(P_{m l'}) - d delta_{l l'}, one entry at a time.
  Complex entry_residual(const Point& gamma, std::size_t l, std::size_t lp) const;

 private:
  // Base values and exact squared gains, so that piecewise filters give exact Gram entries.
  std::vector<std::vector<Complex>> base_values(const Point& gamma) const;

  int level_;
  std::vector<ExactPoint> nu_;
  std::vector<PeriodicFilter> rows_;
  Domain V_;
  Lattice coarse_annihilator_;
  std::vector<double> gain_sq_;
};

UepMatrix assemble_P(const LatticeChain& chain, int k, const PeriodicFilter& H, const std::vector<PeriodicFilter>& G);

struct VerificationReport {
  double max_residual = 0.0;
  Point worst_point;
  std::size_t samples = 0;
  bool exhaustive = false;  // every point of a finite domain was checked
  std::string certification() const { return exhaustive ? "exact" : "certified on sampled set"; }
};

VerificationReport verify_uep_matrix(const UepMatrix& P, const SamplingPlan& plan);

// Residual at gamma and gamma + shift agree to tol across the plan, for shifts
// in Lambda_k^perp.
bool verify_periodic_extension(const UepMatrix& P, const std::vector<ExactPoint>& shifts,
                               const SamplingPlan& plan = {}, double tol = 1e-12);

}  // namespace lcaframe
