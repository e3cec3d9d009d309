#pragma once

#include "lcaframe/chain.hpp"
#include "lcaframe/filter.hpp"
#include "lcaframe/generator.hpp"
#include "lcaframe/sampling.hpp"
#include "lcaframe/uep.hpp"

#include <optional>
#include <vector>

namespace lcaframe {

// mu(Q_k)^{-N+1/2} times the N-fold convolution of the indicator of Q_k.
class BSplineGenerator {
 public:
  BSplineGenerator(const LatticeChain& chain, int k, int N);

  int level() const { return k_; }
  int order() const { return N_; }
  const GroupSpec& group() const { return group_; }
  Rational support_measure() const { return mu_; }
  double normalization() const { return norm_; }
  // Explicit values on Z (support offset included) or one period of Z_N.
  const std::optional<Sequence>& samples() const { return samples_; }

  double operator()(const Point& x) const;
  Complex hat(const Point& gamma) const;
  Generator to_generator() const;

 private:
  GroupSpec group_;
  int k_;
  int N_;
  Rational mu_;
  double norm_;
  std::int64_t points_ = 0;       // |Q_k| on discrete groups
  std::int64_t lo_ = 0;
  std::vector<double> widths_;    // side lengths of Q_k on continuous groups
  std::optional<Sequence> samples_;
};

BSplineGenerator bspline_time(const LatticeChain& chain, int k, int N);
Complex bspline_hat(const LatticeChain& chain, int k, int N, const Point& gamma);

// Cardinal B-spline of order N supported on [0, N] (indicator of [0,1) for N = 1).
double cardinal_bspline(int N, double t);

PeriodicFilter h_filter(const LatticeChain& chain, int k, int N);
PeriodicFilter g_filter_order1(const LatticeChain& chain, int k);
std::vector<PeriodicFilter> g_filters_even(const LatticeChain& chain, int k, int M_half);
// N = 1 or even N; odd N >= 3 has no wavelet filters.
std::vector<PeriodicFilter> bspline_wavelet_filters(const LatticeChain& chain, int k, int N);

// A point of Q_k not covered exactly once by Q_{k+1} and eta_k + Q_{k+1}.
std::optional<ExactPoint> splitting_violation(const LatticeChain& chain, int k);

// Where refinement identities are sampled: the whole dual when compact,
// otherwise V_{k+1} dilated by two.
Domain refinement_domain(const LatticeChain& chain, int k);

// max |Phi_k - H_{k+1} Phi_{k+1}| over the plan on refinement_domain.
VerificationReport refinement_residual(const LatticeChain& chain, int k, int N, const SamplingPlan& plan);

Generator wavelet_time(const LatticeChain& chain, int k, const PeriodicFilter& filter, int N);

struct DecayCheck {
  bool holds = true;
  std::vector<Point> hypothesis_points;  // gammas with max_x |(-x, gamma) - 1| <= delta
  double worst_slack = 0.0;              // min of bound - lhs over those points
};

// max over x in Q_k of |(-x, gamma) - 1|.
double decay_hypothesis_value(const LatticeChain& chain, int k, const Point& gamma);
DecayCheck decay_bound_check(const LatticeChain& chain, int k, int N, double delta, const std::vector<Point>& S);

}  // namespace lcaframe
