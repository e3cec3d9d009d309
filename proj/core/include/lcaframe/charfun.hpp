#pragma once

#include "lcaframe/chain.hpp"
#include "lcaframe/filter.hpp"
#include "lcaframe/generator.hpp"
#include "lcaframe/sampling.hpp"
#include "lcaframe/uep.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace lcaframe {

enum class ExampleKind { Z2M, TorusT, RsSeparable, RsBall };

struct ExampleSpec {
  ExampleKind kind = ExampleKind::Z2M;
  int M = 0;                                       // Z2M
  std::vector<std::int64_t> M_seq;                 // TorusT
  std::vector<std::vector<std::int64_t>> M_table;  // RsSeparable, RsBall (one row per axis)
  std::vector<Rational> L;                         // Z2M, TorusT, RsBall: one per level
  std::vector<std::vector<Rational>> L_table;      // RsSeparable: one row per axis
};

// Sets Omega_k inside V_k, nested in k.
class OmegaChain {
 public:
  OmegaChain(std::shared_ptr<const LatticeChain> chain, std::vector<Domain> omega,
             std::optional<ExampleSpec> example = std::nullopt);

  const LatticeChain& chain() const { return *chain_; }
  const std::shared_ptr<const LatticeChain>& chain_ptr() const { return chain_; }
  const Domain& omega(int k) const;
  bool proper(int k) const { return proper_.at(static_cast<std::size_t>(k - chain_->first_level())); }
  const std::optional<ExampleSpec>& example() const { return example_; }

 private:
  std::shared_ptr<const LatticeChain> chain_;
  std::vector<Domain> omega_;
  std::vector<bool> proper_;
  std::optional<ExampleSpec> example_;
};

OmegaChain instantiate_example(const ExampleSpec& spec);
// Omega_k = V_k at every level.
OmegaChain shannon_omega(std::shared_ptr<const LatticeChain> chain);

// mu(V_k)^{-1/2} times the indicator of Omega_k.
Generator char_generator(const OmegaChain& omega, int k);
PeriodicFilter h_char(const OmegaChain& omega, int k);
// d_k filters; requires Omega_k to be a proper subset of V_k.
std::vector<PeriodicFilter> g_char_proper(const OmegaChain& omega, int k);
// d_k - 1 filters; requires Omega_k = V_k and nested V.
std::vector<PeriodicFilter> g_char_shannon(const OmegaChain& omega, int k);

// max |Phi_k - H_{k+1} Phi_{k+1}| over the plan on the refinement domain.
VerificationReport char_refinement_residual(const OmegaChain& omega, int k, const SamplingPlan& plan);

}  // namespace lcaframe
